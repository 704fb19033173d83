#include "weylpert/potentials.hpp"

#include <cctype>
#include <set>

#include "weylpert/errors.hpp"

namespace weylpert {

std::vector<PotentialTerm> expand_series(const SeriesSpec& series) {
  std::vector<PotentialTerm> terms;
  for (unsigned p = 0; p <= series.cutoff; ++p) {
    if (series.kind == SeriesKind::hyperbolic_cosine && p % 2 == 1) continue;
    Rational c = series.coefficient * make_rational(Integer(1), factorial(p));
    terms.push_back({p, series.coupling, c});
  }
  return terms;
}

namespace {

// <0|x^p|0> for even p; used for the first-omitted-term tail bound.
Rational ground_diagonal(unsigned p) {
  auto split = to_number_polynomial(expand_power(p));
  Radical2Scalar value = split.diagonal.eval_order(0, 0) *
                         Radical2Scalar::half_power_of_two(-static_cast<long>(p));
  return value.rat;
}

}  // namespace

NumberPolynomial ModeResult::combined_series() const {
  NumberPolynomial sum(order);
  std::set<std::string> labels;
  for (const auto& t : terms) labels.insert(t.term.coupling);
  if (labels.size() > 1)
    throw UsageError("combined series requires a single coupling across terms");
  for (const auto& t : terms) sum += t.series;
  return sum;
}

Radical2Scalar ModeResult::eval_exact(unsigned level,
                                      const std::map<std::string, Rational>& couplings) const {
  Radical2Scalar energy{Rational(level) + make_rational(1, 2)};
  for (const auto& t : terms) {
    auto it = couplings.find(t.term.coupling);
    if (it == couplings.end())
      throw ValidationError("no value for coupling '" + t.term.coupling + "'");
    energy += t.series.eval_exact(level, it->second);
  }
  return energy;
}

double ModeResult::eval(unsigned level, double coupling_value) const {
  double energy = static_cast<double>(level) + 0.5;
  for (const auto& t : terms) energy += t.series.eval(level, coupling_value);
  return energy;
}

Radical2Scalar MultimodeResult::eval_exact(
    const std::vector<unsigned>& levels, const std::map<std::string, Rational>& couplings) const {
  if (levels.size() != modes.size())
    throw ValidationError("need one quantum number per mode");
  Radical2Scalar total;
  for (std::size_t i = 0; i < modes.size(); ++i) total += modes[i].eval_exact(levels[i], couplings);
  return total;
}

double MultimodeResult::eval(const std::vector<unsigned>& levels, double coupling_value) const {
  if (levels.size() != modes.size())
    throw ValidationError("need one quantum number per mode");
  double total = 0.0;
  for (std::size_t i = 0; i < modes.size(); ++i) total += modes[i].eval(levels[i], coupling_value);
  return total;
}

ModeResult solve_polynomial(const ModeSpec& mode, int k) {
  if (k < 1) throw ValidationError("order must be >= 1");
  std::vector<PotentialTerm> terms = mode.terms;
  if (mode.series) {
    auto expanded = expand_series(*mode.series);
    terms.insert(terms.end(), expanded.begin(), expanded.end());
  }
  if (terms.empty()) throw ValidationError("empty potential mode");
  if (k >= 2 && terms.size() > 1)
    throw ValidationError(
        "multi-term potentials solve at order 1 only; cross-coupling products arise at "
        "higher orders");

  ModeResult result;
  result.spec = mode;
  result.order = k;
  for (const auto& term : terms) {
    TermSolution solution(term, k);
    if (term.coefficient == 0) continue;
    if (term.power == 0) {
      // constant shift: contributes coupling·coefficient exactly
      solution.series.add(1, 0, Radical2Scalar(term.coefficient));
    } else {
      PerturbationResult engine = solve_perturbation(static_cast<int>(term.power), k,
                                                     term.coefficient);
      solution.series = engine.eigenvalue_series;
      solution.engine = std::move(engine);
    }
    result.terms.push_back(std::move(solution));
  }

  if (mode.series) {
    unsigned next_even = mode.series->cutoff + 1;
    if (next_even % 2 == 1) ++next_even;
    result.tail_power = next_even;
    Rational magnitude = mode.series->coefficient < 0 ? Rational(-mode.series->coefficient)
                                                      : mode.series->coefficient;
    result.tail_bound_ground =
        magnitude * make_rational(Integer(1), factorial(next_even)) * ground_diagonal(next_even);
  }
  return result;
}

MultimodeResult solve_multimode(const PotentialSpec& spec) {
  if (spec.modes.empty()) throw ValidationError("potential has no modes");
  if (spec.modes.size() > 1 && spec.order != 1)
    throw ValidationError("multimode potentials solve at order 1 only");
  MultimodeResult result;
  for (const auto& mode : spec.modes) result.modes.push_back(solve_polynomial(mode, spec.order));
  return result;
}

// ---------------------------------------------------------------------------
// shorthand parser

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  [[noreturn]] void fail(const std::string& message) const {
    throw ValidationError("potential spec, position " + std::to_string(pos + 1) + ": " + message);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool consume(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  bool number_ahead() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
  }
  bool ident_ahead() {
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  Rational parse_number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.'))
      ++pos;
    if (pos == start) fail("expected a number");
    std::string body = text.substr(start, pos - start);
    if (consume('/')) {
      std::size_t den_start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == den_start) fail("expected a denominator");
      body += "/" + text.substr(den_start, pos - den_start);
    }
    try {
      return rational_from_string(body);
    } catch (const ValidationError&) {
      pos = start;
      fail("malformed number '" + body + "'");
    }
  }

  std::string parse_identifier() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected an identifier");
    return text.substr(start, pos - start);
  }

  unsigned parse_exponent() {
    skip_ws();
    if (peek() == '-') fail("negative powers are not supported");
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected an exponent");
    return static_cast<unsigned>(std::stoul(text.substr(start, pos - start)));
  }

  ModeSpec parse_mode(unsigned series_cutoff) {
    ModeSpec mode;
    mode.variable.clear();
    bool first_term = true;
    while (true) {
      Rational sign(1);
      if (consume('+')) {
      } else if (consume('-')) {
        sign = -1;
      } else if (!first_term) {
        break;
      }
      first_term = false;

      Rational coeff = sign;
      bool saw_number = false;
      if (number_ahead()) {
        coeff *= parse_number();
        saw_number = true;
        consume('*');
      }

      if (!ident_ahead()) {
        if (!saw_number) fail("expected a term");
        // pure constant term
        mode.terms.push_back({0, "", coeff});
      } else {
        std::size_t ident_pos = pos;
        skip_ws();
        ident_pos = pos;
        std::string name = parse_identifier();
        if (name == "exp" || name == "cosh") {
          if (!consume('(')) fail("expected '(' after '" + name + "'");
          std::string var = parse_identifier();
          if (!consume(')')) fail("expected ')'");
          bind_variable(mode, var, ident_pos);
          if (mode.series) fail("at most one series per mode");
          mode.series = SeriesSpec{
              name == "exp" ? SeriesKind::exponential : SeriesKind::hyperbolic_cosine,
              series_cutoff, "", coeff};
        } else {
          bind_variable(mode, name, ident_pos);
          unsigned power = 1;
          if (consume('^')) power = parse_exponent();
          if (ident_ahead()) {
            pos = ident_pos;
            fail("coupled products of variables are not supported; separate uncoupled modes "
                 "with ';'");
          }
          mode.terms.push_back({power, "", coeff});
        }
      }

      char next = peek();
      if (next == '+' || next == '-') continue;
      if (ident_ahead() || number_ahead())
        fail("expected '+', '-', ';' or end of spec");
      break;
    }
    if (mode.terms.empty() && !mode.series) fail("empty mode");
    return mode;
  }

  void bind_variable(ModeSpec& mode, const std::string& var, std::size_t at) {
    if (mode.variable.empty()) {
      mode.variable = var;
    } else if (mode.variable != var) {
      pos = at;
      fail("variable '" + var + "' mixed with '" + mode.variable +
           "' in one mode; uncoupled modes are separated with ';'");
    }
  }
};

}  // namespace

PotentialSpec parse_potential(const std::string& text, int order, unsigned series_cutoff) {
  Parser parser(text);
  PotentialSpec spec;
  spec.order = order;
  if (parser.eof()) parser.fail("empty potential");
  while (true) {
    spec.modes.push_back(parser.parse_mode(series_cutoff));
    if (parser.consume(';')) continue;
    if (!parser.eof()) parser.fail("unexpected trailing input");
    break;
  }

  std::set<std::string> seen;
  for (auto& mode : spec.modes) {
    if (mode.variable.empty()) mode.variable = "x";
    if (!seen.insert(mode.variable).second)
      throw ValidationError("variable '" + mode.variable + "' reused across modes");
  }

  for (std::size_t i = 0; i < spec.modes.size(); ++i) {
    std::string label = spec.modes.size() == 1 ? "lambda" : "lambda" + std::to_string(i + 1);
    for (auto& term : spec.modes[i].terms) term.coupling = label;
    if (spec.modes[i].series) spec.modes[i].series->coupling = label;
  }
  return spec;
}

}  // namespace weylpert
