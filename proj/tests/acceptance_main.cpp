// Acceptance suite: runs every gate criterion and prints one line each.

#include <cmath>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "random_ops.hpp"
#include "weylpert/oracle.hpp"
#include "weylpert/potentials.hpp"

using namespace weylpert;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << index << ": " << name;
  if (!detail.empty()) std::cout << " — " << detail;
  std::cout << "\n";
  if (!ok) ++failures;
}

NormalOrderedOperator mono(int p, int q, long c = 1) {
  return NormalOrderedOperator::monomial(p, q, 0, Radical2Scalar(Rational(c)));
}

// 1. expand_power(4) reproduces the worked fourth-power expansion exactly.
void criterion_1() {
  NormalOrderedOperator expected =
      mono(4, 0) + mono(3, 1, 4) + mono(2, 2, 6) + mono(1, 3, 4) + mono(0, 4) + mono(2, 0, 6) +
      mono(1, 1, 12) + mono(0, 2, 6) + mono(0, 0, 3);
  report(1, "normal ordering of (a+a†)^4, coefficients {1,4,6,4,1,6,12,6,3}",
         expand_power(4) == expected);
}

// 2. Weyl binomial symmetry, exhaustive through n = 12.
void criterion_2() {
  bool ok = true;
  for (unsigned n = 0; n <= 12 && ok; ++n)
    for (unsigned m = 0; m <= n && ok; ++m)
      for (unsigned k = 0; k <= std::min(m, n - m) && ok; ++k)
        ok = weyl_binomial(n, m, k) == weyl_binomial(n, n - m, k);
  report(2, "Weyl binomial symmetry {n m}_k = {n n-m}_k for all n <= 12", ok);
}

// 3. Algebra sizes match the generator-count formula; the sixth-power algebra has 15 elements.
void criterion_3() {
  bool ok = generate_algebra(6, 1).size() == 15;
  std::ostringstream detail;
  for (int n = 3; n <= 12; ++n) {
    std::size_t actual = generate_algebra(n, 1).size();
    std::size_t expected = count_generators(n);
    if (actual != expected) {
      ok = false;
      detail << "n=" << n << " actual " << actual << " expected " << expected << "; ";
    }
  }
  report(3, "algebra sizes equal (κ+1)κ+3 for n = 3..12 and |A6| = 15", ok, detail.str());
}

// 4. Quartic first order: alphas {1/16, 1/2, 3/4}; shift (3λ/2)N(N+1) + 3λ/4; E0 slope 3/4.
void criterion_4() {
  PerturbationResult result = solve_first_order(4);
  std::map<std::pair<int, int>, Radical2Scalar> alphas;
  for (const auto& t : result.generator.per_order[0])
    alphas[{t.element.high, t.element.low}] = t.coefficient.value_or(Radical2Scalar(0));
  bool ok = alphas.at({4, 0}) == Radical2Scalar(make_rational(1, 16)) &&
            alphas.at({3, 1}) == Radical2Scalar(make_rational(1, 2)) &&
            alphas.at({2, 0}) == Radical2Scalar(make_rational(3, 4));
  auto monomial = result.lambda_operator.monomial_coefficients(1);
  ok = ok && monomial.size() == 3 && monomial[0] == Radical2Scalar(make_rational(3, 4)) &&
       monomial[1] == Radical2Scalar(make_rational(3, 2)) &&
       monomial[2] == Radical2Scalar(make_rational(3, 2));
  ok = ok && result.lambda_operator.eval_order(1, 0) == Radical2Scalar(make_rational(3, 4));
  report(4, "quartic first order: alphas {1/16, 1/2, 3/4}, shift (3λ/2)N(N+1)+3λ/4", ok);
}

// 5. Quintic alphas match the six 2^(-5/2)-scaled values; odd powers have no first-order shift.
void criterion_5() {
  PerturbationResult result = solve_first_order(5);
  std::map<std::pair<int, int>, Radical2Scalar> alphas;
  for (const auto& t : result.generator.per_order[0])
    alphas[{t.element.high, t.element.low}] = t.coefficient.value_or(Radical2Scalar(0));
  Radical2Scalar scale = Radical2Scalar::half_power_of_two(-5);
  bool ok = alphas.size() == 6 &&
            alphas.at({5, 0}) == scale * Radical2Scalar(make_rational(1, 5)) &&
            alphas.at({4, 1}) == scale * Radical2Scalar(make_rational(5, 3)) &&
            alphas.at({3, 2}) == scale * Radical2Scalar(Rational(10)) &&
            alphas.at({3, 0}) == scale * Radical2Scalar(make_rational(10, 3)) &&
            alphas.at({2, 1}) == scale * Radical2Scalar(Rational(30)) &&
            alphas.at({1, 0}) == scale * Radical2Scalar(Rational(15));
  for (int n : {3, 5, 7, 9}) ok = ok && solve_first_order(n).lambda_operator.order_is_zero(1);
  report(5, "quintic alphas exact; first-order shift vanishes for n = 3,5,7,9", ok);
}

// 6. Even ground state: lambda coefficient (2k)!/(2^(2k)·k!), equal to the oracle diagonal.
void criterion_6() {
  bool ok = true;
  for (unsigned k = 1; k <= 6 && ok; ++k) {
    PerturbationResult result = solve_first_order(static_cast<int>(2 * k));
    Radical2Scalar solved = result.lambda_operator.eval_order(1, 0);
    Rational closed = make_rational(factorial(2 * k), pow2(2 * k) * factorial(k));
    ok = solved == Radical2Scalar(closed) && solved == Radical2Scalar(x_power_diagonal(2 * k, 0));
  }
  report(6, "even ground coefficient equals (2k)!/(2^{2k}k!) and the oracle, k = 1..6", ok);
}

// 7. First-order coefficients at levels 0..10 equal the exact diagonal two ways, k = 1..4.
void criterion_7() {
  bool ok = true;
  for (unsigned k = 1; k <= 4 && ok; ++k) {
    PerturbationResult result = solve_first_order(static_cast<int>(2 * k));
    for (unsigned n = 0; n <= 10 && ok; ++n) {
      Rational formula(0);
      for (unsigned j = 0; j <= k; ++j)
        formula +=
            Rational(factorial(j)) * weyl_binomial(2 * k, k, k - j) * Rational(binomial(n, j));
      formula /= rational_pow2(static_cast<long>(k));
      Radical2Scalar solved = result.lambda_operator.eval_order(1, n);
      ok = solved == Radical2Scalar(formula) &&
           solved == Radical2Scalar(x_power_diagonal(2 * k, n));
    }
  }
  report(7, "first-order coefficients match the binomial formula and oracle, k <= 4, n <= 10", ok);
}

// 8. Quartic second order: exact ground series, beta values, full diagonal vs the oracle.
void criterion_8() {
  PerturbationResult result = solve_higher_order(4, 2);
  bool ok = result.lambda_operator.eval_order(1, 0) == Radical2Scalar(make_rational(3, 4)) &&
            result.lambda_operator.eval_order(2, 0) == Radical2Scalar(make_rational(-21, 8));

  std::map<std::pair<int, int>, Radical2Scalar> betas;
  for (const auto& t : result.generator.per_order[1])
    betas[{t.element.high, t.element.low}] = t.coefficient.value_or(Radical2Scalar(0));
  ok = ok && betas.at({6, 0}) == Radical2Scalar(make_rational(1, 48)) &&
       betas.at({4, 2}) == Radical2Scalar(make_rational(-9, 16)) &&
       betas.at({3, 1}) == Radical2Scalar(make_rational(-9, 4)) &&
       betas.at({2, 0}) == Radical2Scalar(make_rational(-63, 32));

  for (unsigned n = 0; n <= 6; ++n)
    ok = ok && result.lambda_operator.eval_order(2, n) ==
                   Radical2Scalar(rs_corrections(4, n).second_order);

  // informational literature comparison (tuned to the ground state; expected to
  // depart above it)
  ComparisonReport excited = compare(result, 1, {1e-3});
  std::ostringstream detail;
  if (!excited.literature.empty()) {
    detail << "literature level-1 λ² " << to_string(excited.literature[0].literature) << " vs "
           << excited.literature[0].symbolic.to_string() << " (mismatch expected and documented)";
    ok = ok && !excited.literature[0].match;
  }
  report(8,
         "quartic order 2: ground 1/2 + 3λ/4 - 21λ²/8, betas {1/48, -9/16, -9/4, -63/32}, "
         "λ² diagonal equals the oracle for n = 0..6",
         ok, detail.str());
}

// 9. Numeric convergence: quartic order-2 residual slope over [1e-3, 1e-2] at D = 80.
void criterion_9() {
  PerturbationResult result = solve_higher_order(4, 2);
  ComparisonReport cmp = compare(result, 0, {1e-3, 2e-3, 4e-3, 7e-3, 1e-2}, 80);
  std::ostringstream detail;
  detail << "slope " << cmp.slope;
  report(9, "quartic order-2 residual scales with slope >= 2.5 (expected 3)", cmp.slope >= 2.5,
         detail.str());
}

// 10. Harmonic cases: closed forms, the order-2 engine run, and the numeric spectrum.
void criterion_10() {
  HarmonicSpectrum h1 = exact_harmonic(HarmonicCase::shifted_line);
  PerturbationResult engine = solve_higher_order(1, 2);
  bool ok = engine.lambda_operator == h1.series(2);
  for (unsigned n = 0; n <= 5 && ok; ++n) {
    Rational lambda = make_rational(3, 7);
    Radical2Scalar expected{Rational(n) + make_rational(1, 2) - lambda * lambda / 2};
    ok = eigenvalue_exact(engine.lambda_operator, n, lambda) == expected &&
         Radical2Scalar(h1.eval_exact(n, lambda)) == expected;
  }

  HarmonicSpectrum h2 = exact_harmonic(HarmonicCase::shifted_frequency);
  double worst = 0.0;
  for (double lambda : {0.1, 0.5}) {
    FockMatrix fm = build_matrix(anharmonic_hamiltonian(2, 1), lambda, 200);
    std::vector<double> levels = numeric_spectrum(fm, 6);
    for (unsigned n = 0; n <= 5; ++n)
      worst = std::max(worst, std::abs(levels[n] - h2.eval(n, lambda)));
  }
  ok = ok && worst < 1e-9;
  std::ostringstream detail;
  detail << "max spectrum deviation " << worst;
  report(10, "H1 equals n + 1/2 - λ²/2 via both routes; H2 spectrum matches √(1+2λ)(n+1/2)", ok,
         detail.str());
}

// 11. Series potential: exp(x) at cutoff 24 gives e^(1/4); cosh gives the identical coefficient.
void criterion_11() {
  ModeResult exp_mode = solve_polynomial(parse_potential("exp(x)").modes[0], 1);
  ModeResult cosh_mode = solve_polynomial(parse_potential("cosh(x)").modes[0], 1);
  double coefficient = exp_mode.combined_series().eval_order(1, 0).to_double();
  double error = std::abs(coefficient - std::exp(0.25));
  bool ok = error < 1e-12;
  ok = ok && exp_mode.combined_series().eval_order(1, 0) ==
                 cosh_mode.combined_series().eval_order(1, 0);
  std::ostringstream detail;
  detail << "|coefficient - e^(1/4)| = " << error;
  report(11, "exp(x) cutoff-24 ground coefficient equals e^(1/4); cosh identical", ok,
         detail.str());
}

// 12. Multimode: x^1; y^4 ground energy 1 + (3/4)λ2, exact.
void criterion_12() {
  MultimodeResult result = solve_multimode(parse_potential("x^1; y^4"));
  std::map<std::string, Rational> couplings{{"lambda1", make_rational(1, 5)},
                                            {"lambda2", make_rational(1, 5)}};
  bool ok = result.modes[0].terms[0].series.eval_order(1, 0) == Radical2Scalar(0) &&
            result.modes[1].terms[0].series.eval_order(1, 0) ==
                Radical2Scalar(make_rational(3, 4)) &&
            result.eval_exact({0, 0}, couplings) ==
                Radical2Scalar(Rational(1) + make_rational(3, 4) * make_rational(1, 5));
  report(12, "two uncoupled modes: ground energy 1 + (3/4)λ2 exactly", ok);
}

// 13. Property suites on >= 200 randomized instances each, powers <= 6.
void criterion_13() {
  using testing::RandomOps;
  bool ok = true;
  std::ostringstream detail;

  {
    RandomOps gen(101);
    for (int i = 0; i < 200 && ok; ++i) {
      NormalOrderedOperator p = gen.op(6, 2, 3), q = gen.op(6, 2, 3), r = gen.op(6, 2, 3);
      ok = multiply(multiply(p, q), r) == multiply(p, multiply(q, r));
    }
    if (!ok) detail << "associativity failed; ";
  }
  {
    RandomOps gen(103);
    for (int i = 0; i < 200 && ok; ++i) {
      NormalOrderedOperator p = gen.op(5, 2, 2), q = gen.op(5, 2, 2), r = gen.op(5, 2, 2);
      NormalOrderedOperator jacobi = commutator(p, commutator(q, r)) +
                                     commutator(q, commutator(r, p)) +
                                     commutator(r, commutator(p, q));
      ok = jacobi.is_zero();
    }
    if (!ok) detail << "Jacobi failed; ";
  }
  {
    RandomOps gen(107);
    for (int i = 0; i < 200 && ok; ++i) {
      NormalOrderedOperator p = gen.op(6, 2, 3), q = gen.op(6, 2, 3);
      ok = multiply(p, q).dagger() == multiply(q.dagger(), p.dagger());
    }
    if (!ok) detail << "dagger anti-homomorphism failed; ";
  }
  {
    RandomOps gen(109);
    for (int i = 0; i < 200 && ok; ++i) {
      NormalOrderedOperator p = gen.op(5, 1, 3);
      NormalOrderedOperator hermitian = p + p.dagger();
      FockMatrix fm = build_matrix(hermitian, 0.29, 16);
      ok = (fm.entries - fm.entries.transpose()).cwiseAbs().maxCoeff() == 0.0;
      if (ok && !(p == p.dagger())) {
        FockMatrix raw = build_matrix(p, 0.29, 16);
        ok = (raw.entries - raw.entries.transpose()).cwiseAbs().maxCoeff() > 0.0;
      }
    }
    if (!ok) detail << "Hermiticity/symmetry failed; ";
  }
  {
    RandomOps gen(113);
    const int dim = 28;
    for (int i = 0; i < 200 && ok; ++i) {
      NormalOrderedOperator p = gen.op(6, 0, 3), q = gen.op(6, 0, 3);
      int w = std::max(p.max_power(), q.max_power());
      int safe = dim - 2 * w;
      if (safe <= 0) continue;
      Eigen::MatrixXd direct =
          build_matrix(p, 0.31, dim).entries * build_matrix(q, 0.31, dim).entries;
      FockMatrix prod = build_matrix(multiply(p, q), 0.31, dim);
      for (int r = 0; r < safe && ok; ++r)
        for (int s = 0; s < safe && ok; ++s)
          ok = std::abs(prod.entries(r, s) - direct(r, s)) <=
               1e-10 * std::max(1.0, std::abs(prod.entries(r, s)));
    }
    if (!ok) detail << "matrix-block homomorphism failed; ";
  }
  report(13,
         "property suites (associativity, Jacobi, dagger, Hermiticity, matrix blocks), "
         "200 randomized instances each",
         ok, detail.str());
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();
  criterion_13();

  if (failures == 0) {
    std::cout << "all 13 criteria passed\n";
    return 0;
  }
  std::cout << failures << " criteria failed\n";
  return 1;
}
