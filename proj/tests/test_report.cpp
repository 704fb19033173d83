#include <doctest.h>

#include "weylpert/errors.hpp"
#include "weylpert/report.hpp"

using namespace weylpert;

TEST_CASE("perturbation report carries exact strings") {
  PerturbationResult result = solve_higher_order(4, 2);
  Json report = perturbation_report(result, {0});
  CHECK(report["schema"] == kSchema);
  CHECK(report["n"] == 4);
  CHECK(report["residual_zero"] == true);

  const auto& orders = report["levels"][0]["orders"];
  CHECK(orders[0]["value"] == "3/4");
  CHECK(orders[1]["value"] == "-21/8");

  bool found_alpha = false;
  for (const auto& alpha : report["alphas"])
    if (alpha["order"] == 1 && alpha["p"] == 4 && alpha["q"] == 0) {
      CHECK(alpha["value"] == "1/16");
      found_alpha = true;
    }
  CHECK(found_alpha);
}

TEST_CASE("json reports round-trip byte-identically") {
  PerturbationResult result = solve_higher_order(4, 2);
  Json report = perturbation_report(result, {0, 1, 2});
  std::string once = report.dump(2);
  std::string twice = Json::parse(once).dump(2);
  CHECK(once == twice);

  LieAlgebra alg = generate_algebra(4, 1);
  Json algebra = algebra_report(alg, structure_constants(alg));
  CHECK(algebra.dump(2) == Json::parse(algebra.dump(2)).dump(2));

  ComparisonReport cmp = compare(result, 0, {1e-3, 3e-3, 1e-2});
  Json verify = verify_report(parse_potential("x^4", 2), 2, {cmp});
  CHECK(verify.dump(2) == Json::parse(verify.dump(2)).dump(2));
}

TEST_CASE("algebra report counts and parities") {
  LieAlgebra alg = generate_algebra(6, 1);
  Json report = algebra_report(alg, structure_constants(alg));
  CHECK(report["size"] == 15);
  CHECK(report["count_formula"]["expected"] == 15);
  CHECK(report["count_formula"]["match"] == true);
  CHECK(report["basis"].size() == 15);
  CHECK(report["basis"][0]["name"] == "H0");
  CHECK(report["basis"][3].contains("parity"));
}

TEST_CASE("potential specs round-trip through json") {
  Json spec_json = Json::parse(R"({
    "modes": [{"terms": [{"power": 4, "coupling": "lambda", "coefficient": "1"}],
               "series": null}],
    "order": 1
  })");
  PotentialSpec spec = potential_from_json(spec_json);
  REQUIRE(spec.modes.size() == 1);
  CHECK(spec.modes[0].terms[0].power == 4);
  CHECK(spec.modes[0].terms[0].coupling == "lambda");
  CHECK(spec.modes[0].terms[0].coefficient == Rational(1));

  Json series_json = Json::parse(R"({
    "modes": [{"series": {"kind": "exp", "cutoff": 12}}],
    "order": 1
  })");
  PotentialSpec series_spec = potential_from_json(series_json);
  REQUIRE(series_spec.modes[0].series);
  CHECK(series_spec.modes[0].series->cutoff == 12);

  CHECK_THROWS_AS(potential_from_json(Json::parse(R"({"order": 1})")), ValidationError);
  CHECK_THROWS_AS(potential_from_json(Json::parse(R"({"modes": [{"series": {"kind": "tanh"}}]})")),
                  ValidationError);
}

TEST_CASE("table rendering mentions the key numbers") {
  PerturbationResult result = solve_first_order(4);
  MultimodeResult multimode = solve_multimode(parse_potential("x^4"));
  Json report = solve_report(parse_potential("x^4"), multimode, {0});
  std::string table = render_table(report);
  CHECK(table.find("3/4") != std::string::npos);

  LieAlgebra alg = generate_algebra(6, 1);
  std::string algebra_table = render_table(algebra_report(alg, structure_constants(alg)));
  CHECK(algebra_table.find("size=15") != std::string::npos);
}
