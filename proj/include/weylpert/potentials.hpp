#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weylpert/perturbation.hpp"

namespace weylpert {

struct PotentialTerm {
  unsigned power = 0;
  std::string coupling = "lambda";
  Rational coefficient = Rational(1);
};

enum class SeriesKind { exponential, hyperbolic_cosine };

struct SeriesSpec {
  SeriesKind kind = SeriesKind::exponential;
  unsigned cutoff = 24;  // highest power kept
  std::string coupling = "lambda";
  Rational coefficient = Rational(1);
};

struct ModeSpec {
  std::string variable = "x";
  std::vector<PotentialTerm> terms;
  std::optional<SeriesSpec> series;
};

struct PotentialSpec {
  std::vector<ModeSpec> modes;
  int order = 1;

  bool single_mode() const { return modes.size() == 1; }
};

// The series spec expanded into explicit monomial terms:
// exp -> x^k/k! for k = 0..cutoff, cosh -> even k only.
std::vector<PotentialTerm> expand_series(const SeriesSpec& series);

struct TermSolution {
  PotentialTerm term;
  // Eigenvalue contribution per power of this term's own coupling; the
  // term coefficient is already folded in.
  NumberPolynomial series;
  // Present when the full engine ran (single-term modes).
  std::optional<PerturbationResult> engine;

  TermSolution(const PotentialTerm& t, int truncation_order)
      : term(t), series(truncation_order) {}
};

struct ModeResult {
  ModeSpec spec;
  int order = 1;
  std::vector<TermSolution> terms;
  // First omitted even power of a truncated series and its diagonal bound at
  // level 0 (series modes only).
  std::optional<unsigned> tail_power;
  std::optional<Rational> tail_bound_ground;

  // Sum of per-term polynomials; requires every term to share one coupling.
  NumberPolynomial combined_series() const;
  // n + 1/2 + contributions, all couplings evaluated from the map.
  Radical2Scalar eval_exact(unsigned level,
                            const std::map<std::string, Rational>& couplings) const;
  double eval(unsigned level, double coupling_value) const;
};

struct MultimodeResult {
  std::vector<ModeResult> modes;

  Radical2Scalar eval_exact(const std::vector<unsigned>& levels,
                            const std::map<std::string, Rational>& couplings) const;
  double eval(const std::vector<unsigned>& levels, double coupling_value) const;
};

// First-order results combine linearly over terms; k ≥ 2 needs a
// single-term mode (cross-coupling products arise otherwise) and throws
// ValidationError for multi-term input.
ModeResult solve_polynomial(const ModeSpec& mode, int k);

// Uncoupled modes solve independently; energies add.
MultimodeResult solve_multimode(const PotentialSpec& spec);

// Shorthand parser: "x^4", "x^3 + 0.5 x^4", "exp(x)", "cosh(x)",
// "x^1; y^4".  Couplings are "lambda" for a single mode, "lambda1",
// "lambda2", ... per mode otherwise.  Throws ValidationError with a
// position-annotated message.
PotentialSpec parse_potential(const std::string& text, int order = 1,
                              unsigned series_cutoff = 24);

}  // namespace weylpert
