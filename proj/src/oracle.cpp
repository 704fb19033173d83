#include "weylpert/oracle.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

#include "weylpert/errors.hpp"

namespace weylpert {

namespace {

double falling_product(int from, int count) {
  double v = 1.0;
  for (int t = 0; t < count; ++t) v *= static_cast<double>(from - t);
  return v;
}

}  // namespace

FockMatrix build_matrix(const NormalOrderedOperator& op, double lambda_value, int dim) {
  int w = op.max_power();
  if (dim <= 2 * w)
    throw ValidationError("Fock dimension must exceed twice the largest ladder power");
  FockMatrix fm{dim, Eigen::MatrixXd::Zero(dim, dim), w, 2 * w};
  for (const auto& [key, series] : op.terms()) {
    double c = series.evaluate(lambda_value);
    if (c == 0.0) continue;
    // a†^p a^q |j> = sqrt(j·(j−1)···(j−q+1) · (j−q+p)···(j−q+1)) |j−q+p>;
    // a single square root keeps diagonal amplitudes and transposes exact
    for (int j = key.q; j < dim; ++j) {
      int i = j - key.q + key.p;
      if (i >= dim) continue;
      double amp = std::sqrt(falling_product(j, key.q) * falling_product(i, key.p));
      fm.entries(i, j) += c * amp;
    }
  }
  return fm;
}

namespace {

void require_symmetric(const FockMatrix& h) {
  double scale = std::max(1.0, h.entries.cwiseAbs().maxCoeff());
  double asym = (h.entries - h.entries.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12 * scale) throw ValidationError("matrix is not symmetric");
}

}  // namespace

std::vector<double> numeric_spectrum(const FockMatrix& h, int count) {
  if (count > h.dim) throw ValidationError("asked for more eigenvalues than the dimension");
  require_symmetric(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.entries, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
  return out;
}

double tracked_eigenvalue(const FockMatrix& h, unsigned level) {
  if (static_cast<int>(level) >= h.dim) throw ValidationError("level exceeds the dimension");
  require_symmetric(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.entries);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  int best = 0;
  double best_overlap = -1.0;
  for (int i = 0; i < h.dim; ++i) {
    double overlap = std::abs(solver.eigenvectors()(static_cast<int>(level), i));
    if (overlap > best_overlap) {
      best_overlap = overlap;
      best = i;
    }
  }
  return solver.eigenvalues()(best);
}

Rational x_power_diagonal(unsigned p, unsigned n) {
  if (p % 2 == 1) return Rational(0);
  auto split = to_number_polynomial(expand_power(p));
  Radical2Scalar value =
      split.diagonal.eval_order(0, n) * Radical2Scalar::half_power_of_two(-static_cast<long>(p));
  return value.rat;  // even p: the 2^(-p/2) factor is rational
}

Rational x_power_element_squared(unsigned p, unsigned n, unsigned m) {
  // <n|x^p|m> = 2^(-p/2) sqrt(n! m!) sum_{(j,k): m-k+j = n, k <= m} w_{j,k}/(m-k)!
  Rational sum(0);
  NormalOrderedOperator expansion = expand_power(p);
  for (const auto& [key, series] : expansion.terms()) {
    unsigned j = static_cast<unsigned>(key.p), k = static_cast<unsigned>(key.q);
    if (k > m) continue;
    if (m - k + j != n) continue;
    sum += series.at(0).rat * make_rational(Integer(1), factorial(m - k));
  }
  if (sum == 0) return Rational(0);
  return sum * sum * Rational(factorial(n)) * Rational(factorial(m)) *
         rational_pow2(-static_cast<long>(p));
}

RSCorrection rs_corrections(unsigned potential_power, unsigned level) {
  RSCorrection rs{level, x_power_diagonal(potential_power, level), Rational(0)};
  long n = static_cast<long>(level);
  for (long m = std::max<long>(0, n - static_cast<long>(potential_power));
       m <= n + static_cast<long>(potential_power); ++m) {
    if (m == n) continue;
    Rational sq = x_power_element_squared(potential_power, level, static_cast<unsigned>(m));
    if (sq == 0) continue;
    rs.second_order += sq / Rational(n - m);
  }
  return rs;
}

namespace {

double fit_slope(const std::vector<GridSample>& samples) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (const auto& s : samples) {
    if (s.lambda <= 0.0 || s.residual < 1e-15) continue;
    double x = std::log(s.lambda), y = std::log(s.residual);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  if (count < 2) return 0.0;
  double denom = count * sxx - sx * sx;
  if (denom == 0.0) return 0.0;
  return (count * sxy - sx * sy) / denom;
}

}  // namespace

ComparisonReport compare_series(const NumberPolynomial& series,
                                const NormalOrderedOperator& hamiltonian, unsigned level,
                                const std::vector<double>& lambdas, int dim,
                                std::optional<Rational> rs_first,
                                std::optional<Rational> rs_second) {
  ComparisonReport report;
  report.level = level;
  report.dim = dim;

  if (rs_first) {
    Radical2Scalar symbolic = series.eval_order(1, level);
    report.coefficients.push_back(
        {1, symbolic, *rs_first, symbolic == Radical2Scalar(*rs_first)});
  }
  if (rs_second && series.truncation_order() >= 2) {
    Radical2Scalar symbolic = series.eval_order(2, level);
    report.coefficients.push_back(
        {2, symbolic, *rs_second, symbolic == Radical2Scalar(*rs_second)});
  }

  for (double lambda : lambdas) {
    FockMatrix fm = build_matrix(hamiltonian, lambda, dim);
    GridSample sample;
    sample.lambda = lambda;
    sample.series_value = eigenvalue(series, level, lambda);
    sample.eigenvalue = tracked_eigenvalue(fm, level);
    sample.residual = std::abs(sample.series_value - sample.eigenvalue);
    report.numeric.push_back(sample);
  }
  report.slope = fit_slope(report.numeric);
  return report;
}

ComparisonReport compare(const PerturbationResult& result, unsigned level,
                         const std::vector<double>& lambdas, int dim_override) {
  unsigned p = static_cast<unsigned>(result.potential_power);
  int k = result.order;
  const Rational& c = result.potential_coefficient;
  int dim = std::max(dim_override,
                     static_cast<int>(level) + k * static_cast<int>(p) + 40);

  RSCorrection rs = rs_corrections(p, level);
  NormalOrderedOperator hamiltonian = anharmonic_hamiltonian(p, k, c);
  ComparisonReport report =
      compare_series(result.eigenvalue_series, hamiltonian, level, lambdas, dim,
                     rs.first_order * c,
                     k >= 2 ? std::optional<Rational>(rs.second_order * c * c) : std::nullopt);

  if (p == 4 && k >= 2 && c == 1) {
    // published second-order quartic diagonal, tuned to the ground state:
    // eigenvalue coefficient −(51·C(n,3) + (117/2)·C(n,2) + 36n + 21/8)
    long n = static_cast<long>(level);
    Rational lit = -(Rational(51) * Rational(binomial(level, 3)) +
                     make_rational(117, 2) * Rational(binomial(level, 2)) + Rational(36 * n) +
                     make_rational(21, 8));
    Radical2Scalar symbolic = result.eigenvalue_series.eval_order(2, level);
    report.literature.push_back({2, lit, symbolic, symbolic == Radical2Scalar(lit)});
  }
  return report;
}

}  // namespace weylpert
