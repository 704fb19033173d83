#include "weylpert/report.hpp"

#include <sstream>

#include "weylpert/errors.hpp"

namespace weylpert {

Json to_json(const Radical2Scalar& value) {
  return Json{{"exact", value.to_string()}, {"decimal", value.to_double()}};
}

namespace {

Json coefficients_json(const std::vector<Radical2Scalar>& coefficients) {
  Json exact = Json::array();
  Json decimal = Json::array();
  for (const auto& c : coefficients) {
    exact.push_back(c.to_string());
    decimal.push_back(c.to_double());
  }
  return Json{{"exact", exact}, {"decimal", decimal}};
}

}  // namespace

Json to_json(const NumberPolynomial& poly) {
  Json orders = Json::array();
  for (int j = 1; j <= poly.truncation_order(); ++j) {
    std::vector<Radical2Scalar> binomial;
    for (int i = 0; i <= std::max(poly.degree(j), 0); ++i)
      binomial.push_back(poly.coefficient(j, i));
    Json entry{{"order", j},
               {"binomial_basis", coefficients_json(binomial)},
               {"monomial_basis", coefficients_json(poly.monomial_coefficients(j))}};
    orders.push_back(entry);
  }
  return orders;
}

namespace {

Json series_to_json(const std::optional<SeriesSpec>& series) {
  if (!series) return nullptr;
  return Json{{"kind", series->kind == SeriesKind::exponential ? "exp" : "cosh"},
              {"cutoff", series->cutoff},
              {"coupling", series->coupling},
              {"coefficient", to_string(series->coefficient)}};
}

Json potential_to_json(const PotentialSpec& spec) {
  Json modes = Json::array();
  for (const auto& mode : spec.modes) {
    Json terms = Json::array();
    for (const auto& t : mode.terms)
      terms.push_back(Json{{"power", t.power},
                           {"coupling", t.coupling},
                           {"coefficient", to_string(t.coefficient)}});
    modes.push_back(Json{{"variable", mode.variable},
                         {"terms", terms},
                         {"series", series_to_json(mode.series)}});
  }
  return Json{{"modes", modes}, {"order", spec.order}};
}

Json level_series_json(const NumberPolynomial& poly, unsigned level) {
  Json orders = Json::array();
  for (int j = 1; j <= poly.truncation_order(); ++j) {
    Radical2Scalar v = poly.eval_order(j, level);
    orders.push_back(Json{{"order", j}, {"value", v.to_string()}, {"decimal", v.to_double()}});
  }
  return orders;
}

}  // namespace

Json perturbation_report(const PerturbationResult& result, const std::vector<unsigned>& levels) {
  Json alphas = Json::array();
  for (const auto& per_order : result.generator.per_order) {
    for (const auto& term : per_order) {
      Radical2Scalar v = term.coefficient.value_or(Radical2Scalar(0));
      alphas.push_back(Json{{"order", term.element.lambda_power},
                            {"p", term.element.high},
                            {"q", term.element.low},
                            {"value", v.to_string()},
                            {"decimal", v.to_double()}});
    }
  }

  Json level_entries = Json::array();
  for (unsigned level : levels) {
    level_entries.push_back(Json{{"level", level},
                                 {"baseline", to_string(Rational(level) + make_rational(1, 2))},
                                 {"orders", level_series_json(result.eigenvalue_series, level)}});
  }

  return Json{{"schema", kSchema},
              {"kind", "perturbation"},
              {"n", result.potential_power},
              {"k", result.order},
              {"potential_coefficient", to_string(result.potential_coefficient)},
              {"alphas", alphas},
              {"eigenvalue_series", to_json(result.eigenvalue_series)},
              {"lambda_operator", to_json(result.lambda_operator)},
              {"levels", level_entries},
              {"residual_zero", result.residual.is_zero()}};
}

Json algebra_report(const LieAlgebra& alg, const StructureConstants& constants) {
  Json basis = Json::array();
  basis.push_back(Json{{"index", 0}, {"name", "H0"}});
  basis.push_back(Json{{"index", 1}, {"name", "Hn"}});
  basis.push_back(Json{{"index", 2}, {"name", "I"}});
  for (std::size_t i = 0; i < alg.graded.size(); ++i) {
    const auto& e = alg.graded[i];
    basis.push_back(Json{{"index", i + 3},
                         {"lambda_power", e.lambda_power},
                         {"p", e.high},
                         {"q", e.low},
                         {"parity", e.parity == Parity::antisymmetric ? "-" : "+"}});
  }

  Json triples = Json::array();
  Json central = Json::array();
  for (const auto& [pair, expansion] : constants) {
    auto [i, j] = pair;
    for (const auto& [m, series] : expansion.coords) {
      for (int t = 0; t <= series.truncation_order(); ++t) {
        if (series.at(t).is_zero()) continue;
        triples.push_back(Json{{"i", i},
                               {"j", j},
                               {"m", m},
                               {"lambda_power", t},
                               {"c", series.at(t).to_string()}});
      }
    }
    // constant diagonal content is the coordinate on I; higher number-operator
    // content is central at truncation and reported as a polynomial
    bool has_number_content = false;
    for (int t = 0; t <= expansion.central.truncation_order(); ++t) {
      Radical2Scalar c0 = expansion.central.coefficient(t, 0);
      if (!c0.is_zero())
        triples.push_back(
            Json{{"i", i}, {"j", j}, {"m", 2}, {"lambda_power", t}, {"c", c0.to_string()}});
      if (expansion.central.degree(t) > 0) has_number_content = true;
    }
    if (has_number_content) {
      Json rows = Json::array();
      for (int t = 0; t <= expansion.central.truncation_order(); ++t)
        for (int b = 1; b <= expansion.central.degree(t); ++b)
          if (!expansion.central.coefficient(t, b).is_zero())
            rows.push_back(Json{{"lambda_power", t},
                                {"basis_index", b},
                                {"c", expansion.central.coefficient(t, b).to_string()}});
      central.push_back(Json{{"i", i}, {"j", j}, {"number_content", rows}});
    }
  }

  Json count;
  if (alg.potential_power >= 3) {
    std::size_t expected = count_generators(alg.potential_power);
    count = Json{{"applicable", alg.order == 1},
                 {"expected", expected},
                 {"actual", alg.size()},
                 {"match", alg.order != 1 || expected == alg.size()}};
  } else {
    count = Json{{"applicable", false}, {"actual", alg.size()}};
  }

  return Json{{"schema", kSchema},
              {"kind", "algebra"},
              {"n", alg.potential_power},
              {"order", alg.order},
              {"size", alg.size()},
              {"count_formula", count},
              {"basis", basis},
              {"structure_constants", triples},
              {"central", central}};
}

Json comparison_report(const ComparisonReport& report) {
  Json coefficients = Json::array();
  for (const auto& c : report.coefficients)
    coefficients.push_back(Json{{"order", c.order},
                                {"symbolic", c.symbolic.to_string()},
                                {"oracle", to_string(c.oracle)},
                                {"match", c.match}});
  Json numeric = Json::array();
  for (const auto& s : report.numeric)
    numeric.push_back(Json{{"lambda", s.lambda},
                           {"series", s.series_value},
                           {"eigenvalue", s.eigenvalue},
                           {"residual", s.residual}});
  Json out{{"level", report.level},
           {"dim", report.dim},
           {"coefficients", coefficients},
           {"numeric", numeric},
           {"slope", report.slope}};
  if (!report.literature.empty()) {
    Json lit = Json::array();
    for (const auto& l : report.literature)
      lit.push_back(Json{{"order", l.order},
                         {"literature", to_string(l.literature)},
                         {"symbolic", l.symbolic.to_string()},
                         {"match", l.match},
                         {"informational", true}});
    out["literature"] = lit;
  }
  return out;
}

PotentialSpec potential_from_json(const Json& json) {
  PotentialSpec spec;
  try {
    spec.order = json.value("order", 1);
    if (!json.contains("modes") || !json["modes"].is_array() || json["modes"].empty())
      throw ValidationError("potential JSON needs a non-empty 'modes' array");
    std::size_t index = 0;
    for (const auto& mode_json : json["modes"]) {
      ModeSpec mode;
      mode.variable = mode_json.value("variable", std::string(1, static_cast<char>('x' + index)));
      std::string default_coupling =
          json["modes"].size() == 1 ? "lambda" : "lambda" + std::to_string(index + 1);
      if (mode_json.contains("terms"))
        for (const auto& term_json : mode_json["terms"]) {
          PotentialTerm term;
          term.power = term_json.at("power").get<unsigned>();
          term.coupling = term_json.value("coupling", default_coupling);
          term.coefficient = rational_from_string(term_json.value("coefficient", std::string("1")));
          mode.terms.push_back(term);
        }
      if (mode_json.contains("series") && !mode_json["series"].is_null()) {
        const auto& s = mode_json["series"];
        SeriesSpec series;
        std::string kind = s.value("kind", "exp");
        if (kind == "exp")
          series.kind = SeriesKind::exponential;
        else if (kind == "cosh")
          series.kind = SeriesKind::hyperbolic_cosine;
        else
          throw ValidationError("unknown series kind '" + kind + "'");
        series.cutoff = s.value("cutoff", 24u);
        series.coupling = s.value("coupling", default_coupling);
        series.coefficient = rational_from_string(s.value("coefficient", std::string("1")));
        mode.series = series;
      }
      if (mode.terms.empty() && !mode.series)
        throw ValidationError("mode " + std::to_string(index) + " has no terms");
      spec.modes.push_back(std::move(mode));
      ++index;
    }
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed potential JSON: ") + e.what());
  }
  return spec;
}

Json solve_report(const PotentialSpec& spec, const MultimodeResult& result,
                  const std::vector<unsigned>& levels) {
  Json modes = Json::array();
  for (const auto& mode : result.modes) {
    Json terms = Json::array();
    for (const auto& t : mode.terms) {
      Json entry{{"power", t.term.power},
                 {"coupling", t.term.coupling},
                 {"coefficient", to_string(t.term.coefficient)},
                 {"eigenvalue_series", to_json(t.series)}};
      if (t.engine) {
        entry["n"] = t.engine->potential_power;
        entry["k"] = t.engine->order;
        Json alphas = Json::array();
        for (const auto& per_order : t.engine->generator.per_order)
          for (const auto& g : per_order) {
            Radical2Scalar v = g.coefficient.value_or(Radical2Scalar(0));
            alphas.push_back(Json{{"order", g.element.lambda_power},
                                  {"p", g.element.high},
                                  {"q", g.element.low},
                                  {"value", v.to_string()},
                                  {"decimal", v.to_double()}});
          }
        entry["alphas"] = alphas;
        entry["residual_zero"] = t.engine->residual.is_zero();
      }
      terms.push_back(entry);
    }

    Json mode_json{{"variable", mode.spec.variable}, {"order", mode.order}, {"terms", terms}};
    if (mode.tail_power)
      mode_json["series_tail"] = Json{{"first_omitted_power", *mode.tail_power},
                                      {"ground_bound", to_string(*mode.tail_bound_ground)},
                                      {"ground_bound_decimal", mode.tail_bound_ground->get_d()}};

    Json level_entries = Json::array();
    for (unsigned level : levels) {
      Json per_term = Json::array();
      for (const auto& t : mode.terms)
        per_term.push_back(
            Json{{"coupling", t.term.coupling}, {"orders", level_series_json(t.series, level)}});
      level_entries.push_back(
          Json{{"level", level},
               {"baseline", to_string(Rational(level) + make_rational(1, 2))},
               {"terms", per_term}});
    }
    mode_json["levels"] = level_entries;
    modes.push_back(mode_json);
  }

  Json out{{"schema", kSchema},
           {"kind", "solve"},
           {"potential", potential_to_json(spec)},
           {"order", spec.order},
           {"modes", modes}};

  if (result.modes.size() > 1) {
    // combined ground energy: per-mode baselines add
    Rational baseline(0);
    for (std::size_t i = 0; i < result.modes.size(); ++i) baseline += make_rational(1, 2);
    Json per_mode = Json::array();
    for (const auto& mode : result.modes) {
      Json per_term = Json::array();
      for (const auto& t : mode.terms)
        per_term.push_back(
            Json{{"coupling", t.term.coupling}, {"orders", level_series_json(t.series, 0)}});
      per_mode.push_back(Json{{"variable", mode.spec.variable}, {"terms", per_term}});
    }
    out["combined_ground"] = Json{{"baseline", to_string(baseline)}, {"modes", per_mode}};
  }
  return out;
}

Json verify_report(const PotentialSpec& spec, int order,
                   const std::vector<ComparisonReport>& reports) {
  Json levels = Json::array();
  for (const auto& r : reports) levels.push_back(comparison_report(r));
  return Json{{"schema", kSchema},
              {"kind", "verify"},
              {"potential", potential_to_json(spec)},
              {"order", order},
              {"levels", levels}};
}

namespace {

void render_solve(const Json& report, std::ostream& os) {
  os << "potential order " << report["order"].get<int>() << "\n";
  for (const auto& mode : report["modes"]) {
    std::string variable = mode["variable"].get<std::string>();
    os << "mode " << variable << "\n";
    for (const auto& term : mode["terms"]) {
      os << "  term " << variable << "^" << term["power"].get<unsigned>() << "  coupling "
         << term["coupling"].get<std::string>() << "  coefficient "
         << term["coefficient"].get<std::string>() << "\n";
      if (term.contains("alphas")) {
        for (const auto& a : term["alphas"])
          os << "    alpha[order " << a["order"].get<int>() << ", (" << a["p"].get<int>() << ","
             << a["q"].get<int>() << ")] = " << a["value"].get<std::string>() << "\n";
      }
    }
    for (const auto& level : mode["levels"]) {
      os << "  level " << level["level"].get<unsigned>() << ": E = "
         << level["baseline"].get<std::string>();
      for (const auto& term : level["terms"])
        for (const auto& o : term["orders"])
          os << " + (" << o["value"].get<std::string>() << ")·" << term["coupling"].get<std::string>()
             << "^" << o["order"].get<int>();
      os << "\n";
    }
    if (mode.contains("series_tail"))
      os << "  series tail bound (ground): " << mode["series_tail"]["ground_bound"].get<std::string>()
         << "\n";
  }
  if (report.contains("combined_ground"))
    os << "combined ground baseline: " << report["combined_ground"]["baseline"].get<std::string>()
       << "\n";
}

void render_algebra(const Json& report, std::ostream& os) {
  os << "algebra n=" << report["n"].get<int>() << " order=" << report["order"].get<int>()
     << " size=" << report["size"].get<std::size_t>() << "\n";
  const auto& count = report["count_formula"];
  if (count.contains("expected"))
    os << "generator count: expected " << count["expected"].get<std::size_t>() << ", actual "
       << count["actual"].get<std::size_t>() << ", match "
       << (count["match"].get<bool>() ? "yes" : "no") << "\n";
  os << "basis:\n";
  for (const auto& b : report["basis"]) {
    if (b.contains("name"))
      os << "  [" << b["index"].get<std::size_t>() << "] " << b["name"].get<std::string>() << "\n";
    else
      os << "  [" << b["index"].get<std::size_t>() << "] lambda^" << b["lambda_power"].get<int>()
         << " (a†^" << b["p"].get<int>() << " a^" << b["q"].get<int>() << " "
         << b["parity"].get<std::string>() << " a†^" << b["q"].get<int>() << " a^"
         << b["p"].get<int>() << ")\n";
  }
  os << "structure constants: " << report["structure_constants"].size() << " triples\n";
}

void render_verify(const Json& report, std::ostream& os) {
  os << "verify order " << report["order"].get<int>() << "\n";
  for (const auto& level : report["levels"]) {
    os << "level " << level["level"].get<unsigned>() << " (dim " << level["dim"].get<int>()
       << ")\n";
    for (const auto& c : level["coefficients"])
      os << "  order " << c["order"].get<int>() << ": symbolic " << c["symbolic"].get<std::string>()
         << "  oracle " << c["oracle"].get<std::string>() << "  match "
         << (c["match"].get<bool>() ? "yes" : "no") << "\n";
    if (level.contains("literature"))
      for (const auto& l : level["literature"])
        os << "  literature order " << l["order"].get<int>() << ": "
           << l["literature"].get<std::string>() << " vs " << l["symbolic"].get<std::string>()
           << " (informational, match " << (l["match"].get<bool>() ? "yes" : "no") << ")\n";
    for (const auto& s : level["numeric"])
      os << "  lambda " << s["lambda"].get<double>() << ": series " << s["series"].get<double>()
         << "  eigenvalue " << s["eigenvalue"].get<double>() << "  residual "
         << s["residual"].get<double>() << "\n";
    os << "  slope " << level["slope"].get<double>() << "\n";
  }
}

}  // namespace

std::string render_table(const Json& report) {
  std::ostringstream os;
  std::string kind = report.value("kind", "");
  if (kind == "solve")
    render_solve(report, os);
  else if (kind == "algebra")
    render_algebra(report, os);
  else if (kind == "verify")
    render_verify(report, os);
  else
    os << report.dump(2) << "\n";
  return os.str();
}

}  // namespace weylpert
