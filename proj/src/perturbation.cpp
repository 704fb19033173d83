#include "weylpert/perturbation.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "weylpert/errors.hpp"

namespace weylpert {

bool GeneratorAnsatz::solved() const {
  for (const auto& terms : per_order)
    for (const auto& t : terms)
      if (!t.coefficient) return false;
  return true;
}

NormalOrderedOperator GeneratorAnsatz::value_up_to(int max_order, int truncation_order) const {
  NormalOrderedOperator x(truncation_order);
  for (const auto& terms : per_order) {
    for (const auto& t : terms) {
      if (t.element.lambda_power > max_order) continue;
      if (!t.coefficient) throw UsageError("generator coefficient not solved");
      if (t.coefficient->is_zero()) continue;
      NormalOrderedOperator v = t.element.value.truncated(truncation_order);
      v.scale(*t.coefficient);
      x += v;
    }
  }
  return x;
}

NormalOrderedOperator GeneratorAnsatz::value(int truncation_order) const {
  return value_up_to(order, truncation_order);
}

namespace {

NormalOrderedOperator hadamard_with_operator(const NormalOrderedOperator& h,
                                             const NormalOrderedOperator& x,
                                             int truncation_order) {
  NormalOrderedOperator minus_x = -x.truncated(truncation_order);
  NormalOrderedOperator result = h.truncated(truncation_order);
  NormalOrderedOperator nested = result;
  for (int m = 1; m <= truncation_order; ++m) {
    nested = commutator(minus_x, nested);
    if (nested.is_zero()) break;
    NormalOrderedOperator term = nested;
    term.scale(Radical2Scalar(make_rational(Integer(1), factorial(static_cast<unsigned long>(m)))));
    result += term;
  }
  return result;
}

}  // namespace

NormalOrderedOperator hadamard_conjugate(const NormalOrderedOperator& h, const GeneratorAnsatz& x,
                                         int truncation_order) {
  if (!x.solved()) throw UsageError("hadamard_conjugate requires a fully solved generator");
  return hadamard_with_operator(h, x.value(truncation_order), truncation_order);
}

namespace {

// Order-by-order coefficient assignment shared by the two conjugation
// solves: choose the order-j antisymmetric coefficients so the off-diagonal
// deficit vanishes ([H0, (p,q)-antisymmetric] = (p−q)·(p,q)-symmetric makes
// the system diagonal in the monomial basis).
void cancel_off_diagonal(std::vector<GeneratorTerm>& terms, NormalOrderedOperator deficit,
                         int lambda_power, int truncation_order, const Radical2Scalar& sign) {
  int j = lambda_power;
  for (auto& term : terms) {
    const auto& e = term.element;
    Radical2Scalar hi = deficit.coefficient(e.high, e.low, j);
    Radical2Scalar lo = deficit.coefficient(e.low, e.high, j);
    if (hi != lo)
      throw std::logic_error("non-Hermitian off-diagonal deficit at order " + std::to_string(j));
    term.coefficient = sign * hi / Radical2Scalar(Rational(e.high - e.low));
    NormalOrderedOperator covered =
        LieBasisElement::make(j, e.high, e.low, Parity::symmetric, truncation_order).value;
    covered.scale(hi);
    deficit -= covered;
  }
  if (!deficit.is_zero())
    throw ClosureInsufficiencyError(
        "off-diagonal terms at lambda-order " + std::to_string(j) +
        " have no matching generator (algebra order too small): " + deficit.to_string());
}

GeneratorAnsatz empty_ansatz(const LieAlgebra& alg, int k) {
  GeneratorAnsatz ansatz;
  ansatz.order = k;
  ansatz.per_order.resize(static_cast<std::size_t>(k));
  for (int j = 1; j <= k; ++j) {
    auto& terms = ansatz.per_order[static_cast<std::size_t>(j - 1)];
    std::set<std::pair<int, int>> covered;
    for (const auto& e : alg.graded)
      if (e.parity == Parity::antisymmetric && e.lambda_power == j) {
        terms.push_back({e, std::nullopt});
        covered.insert({e.high, e.low});
      }
    // Lambda-shifted copies of lower layers: the algebra spans them as
    // ring-multiples.  Only the hand-built harmonic algebras need this —
    // breadth-first generation already enrolls every reachable key per order.
    for (const auto& e : alg.graded)
      if (e.parity == Parity::antisymmetric && e.lambda_power < j &&
          !covered.count({e.high, e.low})) {
        terms.push_back(
            {LieBasisElement::make(j, e.high, e.low, Parity::antisymmetric, alg.order),
             std::nullopt});
        covered.insert({e.high, e.low});
      }
  }
  return ansatz;
}

}  // namespace

PerturbationResult solve_with_algebra(const LieAlgebra& alg, int n, int k, const Rational& coeff) {
  if (n < 1) throw ValidationError("potential power must be >= 1");
  if (k < 1 || k > alg.order)
    throw ValidationError("requested order exceeds the algebra's truncation order");

  NormalOrderedOperator h0 = harmonic_hamiltonian(k);
  NormalOrderedOperator target = anharmonic_hamiltonian(static_cast<unsigned>(n), k, coeff);

  GeneratorAnsatz ansatz = empty_ansatz(alg, k);
  for (int j = 1; j <= k; ++j) {
    NormalOrderedOperator partial = ansatz.value_up_to(j - 1, k);
    NormalOrderedOperator expansion = hadamard_with_operator(h0, partial, k);
    NormalOrderedOperator deficit = target.lambda_slice(j) - expansion.lambda_slice(j);
    cancel_off_diagonal(ansatz.per_order[static_cast<std::size_t>(j - 1)],
                        deficit.off_diagonal_part(), j, k, Radical2Scalar(1));
  }

  PerturbationResult result(k);
  result.potential_power = n;
  result.order = k;
  result.potential_coefficient = coeff;
  result.generator = std::move(ansatz);
  result.conjugated = hadamard_conjugate(h0, result.generator, k);

  NormalOrderedOperator lambda_op = target - result.conjugated;
  DiagonalSplit split = to_number_polynomial(lambda_op);
  result.lambda_operator = split.diagonal;
  result.residual = -split.off_diagonal;

  // Second pass: conjugate Hn itself down to H0 + diagonal.  The surviving
  // diagonal is spectral at every order, unlike Λ whose lambda³-and-beyond
  // rows pick up corrections from [U,Λ] ≠ 0.
  GeneratorAnsatz diagonalizer = empty_ansatz(alg, k);
  for (int j = 1; j <= k; ++j) {
    NormalOrderedOperator partial = diagonalizer.value_up_to(j - 1, k);
    NormalOrderedOperator flow = hadamard_with_operator(target, partial, k);
    cancel_off_diagonal(diagonalizer.per_order[static_cast<std::size_t>(j - 1)],
                        flow.lambda_slice(j).off_diagonal_part(), j, k, Radical2Scalar(-1));
  }
  NormalOrderedOperator diagonal_flow =
      hadamard_with_operator(target, diagonalizer.value(k), k) - h0;
  DiagonalSplit spectral = to_number_polynomial(diagonal_flow);
  if (!spectral.off_diagonal.is_zero())
    throw std::logic_error("diagonalizing conjugation left off-diagonal content");
  result.eigenvalue_series = spectral.diagonal;
  return result;
}

PerturbationResult solve_perturbation(int n, int k, const Rational& coeff) {
  return solve_with_algebra(generate_algebra(n, k), n, k, coeff);
}

PerturbationResult solve_first_order(int n) { return solve_perturbation(n, 1); }

PerturbationResult solve_higher_order(int n, int k) {
  if (k < 2) throw ValidationError("higher-order solve expects k >= 2");
  return solve_perturbation(n, k);
}

Radical2Scalar eigenvalue_exact(const NumberPolynomial& series, unsigned level,
                                const Rational& lambda) {
  Radical2Scalar base{Rational(level) + make_rational(1, 2)};
  return base + series.eval_exact(level, lambda);
}

double eigenvalue(const NumberPolynomial& series, unsigned level, double lambda) {
  return static_cast<double>(level) + 0.5 + series.eval(level, lambda);
}

Rational HarmonicSpectrum::eval_exact(unsigned level, const Rational& lambda) const {
  if (kind != HarmonicCase::shifted_line)
    throw UsageError("exact rational evaluation is only available for the shifted-line case");
  return Rational(level) + make_rational(1, 2) - lambda * lambda / 2;
}

double HarmonicSpectrum::eval(unsigned level, double lambda) const {
  if (kind == HarmonicCase::shifted_line)
    return static_cast<double>(level) + 0.5 - lambda * lambda / 2.0;
  if (lambda <= -0.5)
    throw std::domain_error("spectrum collapses for lambda <= -1/2");
  return std::sqrt(1.0 + 2.0 * lambda) * (static_cast<double>(level) + 0.5);
}

NumberPolynomial HarmonicSpectrum::series(int k) const {
  NumberPolynomial poly(k);
  if (kind == HarmonicCase::shifted_line) {
    if (k >= 2) poly.add(2, 0, Radical2Scalar(make_rational(-1, 2)));
    return poly;
  }
  // sqrt(1+2lambda) = sum_j prod_{t<j}(1-2t)/j! · lambda^j; the perturbation
  // series is (N + 1/2)(sqrt(1+2lambda) − 1)
  Rational product(1);
  Integer fact(1);
  for (int j = 1; j <= k; ++j) {
    product *= Rational(1 - 2 * (j - 1));
    fact *= j;
    Rational c = product / Rational(fact);
    poly.add(j, 1, Radical2Scalar(c));
    poly.add(j, 0, Radical2Scalar(c / 2));
  }
  return poly;
}

BogoliubovParameters HarmonicSpectrum::bogoliubov(double lambda) const {
  if (kind != HarmonicCase::shifted_frequency) return {1.0, 0.0};
  if (lambda <= -0.5)
    throw std::domain_error("spectrum collapses for lambda <= -1/2");
  double r = 0.5 * std::atanh(lambda / (1.0 + lambda));
  return {std::cosh(r), std::sinh(r)};
}

HarmonicSpectrum exact_harmonic(HarmonicCase kind) { return HarmonicSpectrum{kind}; }

}  // namespace weylpert
