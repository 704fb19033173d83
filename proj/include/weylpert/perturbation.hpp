#pragma once

#include <optional>
#include <vector>

#include "weylpert/lie_closure.hpp"

namespace weylpert {

// The anti-Hermitian generator X = sum_j lambda^j X_j of the unitary
// conjugation, one coefficient per antisymmetric algebra element per order.
struct GeneratorTerm {
  LieBasisElement element;
  std::optional<Radical2Scalar> coefficient;
};

struct GeneratorAnsatz {
  int order = 1;
  std::vector<std::vector<GeneratorTerm>> per_order;  // index j-1 holds order-j terms

  bool solved() const;
  // Sum of coefficient·element over all orders; throws UsageError when any
  // coefficient is still unset.
  NormalOrderedOperator value(int truncation_order) const;
  // Only orders ≤ max_order contribute (unset coefficients there still throw).
  NormalOrderedOperator value_up_to(int max_order, int truncation_order) const;
};

struct PerturbationResult {
  int potential_power = 0;
  int order = 1;
  Rational potential_coefficient = Rational(1);
  GeneratorAnsatz generator;
  NumberPolynomial lambda_operator;   // diagonal content of Λ, orders 1..k
  // True eigenvalue series: the diagonal left after conjugating Hn all the
  // way to H0 + diagonal.  Identical to lambda_operator through lambda²;
  // beyond that Λ alone is not spectral ([U,Λ] ≠ 0 feeds diagonal content
  // like ½[X₁,[X₁,Λ₁]] at lambda³).
  NumberPolynomial eigenvalue_series;
  NormalOrderedOperator residual;     // conjugated − (Hn − Λ); zero when solved
  NormalOrderedOperator conjugated;   // U† H0 U through order k

  PerturbationResult(int truncation_order)
      : lambda_operator(truncation_order),
        eigenvalue_series(truncation_order),
        residual(truncation_order),
        conjugated(truncation_order) {}
};

// sum_m (1/m!) · ad_{−X}^m(h) truncated at lambda-order K; the series
// terminates because X carries at least one power of lambda.
NormalOrderedOperator hadamard_conjugate(const NormalOrderedOperator& h,
                                         const GeneratorAnsatz& x, int truncation_order);

// Order-by-order solve: at each lambda-order j the coefficients of the
// order-j antisymmetric generators cancel every off-diagonal monomial of
// the accumulated expansion (the system is diagonal in the monomial basis
// since [H0, lambda^j(a†^p a^q − a†^q a^p)] = (p−q)·lambda^j(a†^p a^q + a†^q a^p));
// surviving diagonal terms become the eigenvalue polynomial.
PerturbationResult solve_with_algebra(const LieAlgebra& alg, int n, int k,
                                      const Rational& coeff = Rational(1));
PerturbationResult solve_perturbation(int n, int k, const Rational& coeff = Rational(1));
PerturbationResult solve_first_order(int n);
PerturbationResult solve_higher_order(int n, int k);

// Eigenvalue n + 1/2 + sum_j lambda^j · poly_j(n).
Radical2Scalar eigenvalue_exact(const NumberPolynomial& series, unsigned level,
                                const Rational& lambda);
double eigenvalue(const NumberPolynomial& series, unsigned level, double lambda);

enum class HarmonicCase { shifted_line, shifted_frequency };  // H1 | H2

struct BogoliubovParameters {
  double sigma = 1.0;
  double tau = 0.0;
};

// Closed-form spectra for the two harmonic cases:
//   H1 = H0 + lambda·x   ->  E_n = n + 1/2 − lambda²/2 (exact, all orders)
//   H2 = H0 + lambda·x²  ->  E_n = sqrt(1+2·lambda)·(n + 1/2)
struct HarmonicSpectrum {
  HarmonicCase kind;

  // Exact for H1 at rational lambda; throws UsageError for H2 (irrational).
  Rational eval_exact(unsigned level, const Rational& lambda) const;
  // Numeric; H2 throws std::domain_error for lambda ≤ −1/2 (spectrum collapse).
  double eval(unsigned level, double lambda) const;
  // Perturbation series through lambda-order k (H1: exactly −lambda²/2;
  // H2: Taylor coefficients of sqrt(1+2·lambda)·(N+1/2)).
  NumberPolynomial series(int k) const;
  // H2 ladder mixing b = sigma·a + tau·a† with sigma²−tau² = 1; identity for
  // lambda = 0.  Throws std::domain_error for lambda ≤ −1/2.
  BogoliubovParameters bogoliubov(double lambda) const;
};

HarmonicSpectrum exact_harmonic(HarmonicCase kind);

}  // namespace weylpert
