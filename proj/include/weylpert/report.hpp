#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "weylpert/oracle.hpp"
#include "weylpert/potentials.hpp"

namespace weylpert {

inline constexpr const char* kSchema = "weylpert/1";

using Json = nlohmann::ordered_json;

Json to_json(const Radical2Scalar& value);  // {"exact": "...", "decimal": ...}
Json to_json(const NumberPolynomial& poly);

Json perturbation_report(const PerturbationResult& result, const std::vector<unsigned>& levels);
Json algebra_report(const LieAlgebra& alg, const StructureConstants& constants);
Json comparison_report(const ComparisonReport& report);

// Parses the documented input schema:
// {"modes":[{"terms":[{"power":4,"coupling":"lambda","coefficient":"1"}],
//            "series":null}],"order":1}
PotentialSpec potential_from_json(const Json& json);

Json solve_report(const PotentialSpec& spec, const MultimodeResult& result,
                  const std::vector<unsigned>& levels);
Json verify_report(const PotentialSpec& spec, int order,
                   const std::vector<ComparisonReport>& reports);

std::string render_table(const Json& report);

}  // namespace weylpert
