#include "weylpert/weyl_core.hpp"

#include <stdexcept>

namespace weylpert {

Rational weyl_binomial(unsigned n, unsigned m, unsigned k) {
  if (m > n) throw std::domain_error("weyl_binomial: require m <= n");
  if (k > m || k > n - m) throw std::domain_error("weyl_binomial: require k <= min(m, n-m)");
  Integer num = factorial(n);
  Integer den = pow2(k) * factorial(k) * factorial(m - k) * factorial(n - m - k);
  return make_rational(num, den);
}

NormalOrderedOperator expand_power(unsigned n, int truncation_order) {
  NormalOrderedOperator out(truncation_order);
  for (unsigned m = 0; m <= n; ++m) {
    unsigned kmax = std::min(m, n - m);
    for (unsigned k = 0; k <= kmax; ++k)
      out.add_term(static_cast<int>(m - k), static_cast<int>(n - m - k), 0,
                   Radical2Scalar(weyl_binomial(n, m, k)));
  }
  return out;
}

NormalOrderedOperator position_power(unsigned n, int truncation_order, int lambda_power,
                                     const Rational& coeff) {
  NormalOrderedOperator xn = expand_power(n, truncation_order);
  Radical2Scalar scale = Radical2Scalar::half_power_of_two(-static_cast<long>(n));
  scale *= Radical2Scalar(coeff);
  xn.scale(scale);
  return xn.lambda_shifted(lambda_power);
}

NormalOrderedOperator harmonic_hamiltonian(int truncation_order) {
  NormalOrderedOperator h(truncation_order);
  h.add_term(1, 1, 0, Radical2Scalar(1));
  h.add_term(0, 0, 0, Radical2Scalar(make_rational(1, 2)));
  return h;
}

NormalOrderedOperator anharmonic_hamiltonian(unsigned n, int truncation_order,
                                             const Rational& coeff) {
  return harmonic_hamiltonian(truncation_order) + position_power(n, truncation_order, 1, coeff);
}

DiagonalSplit to_number_polynomial(const NormalOrderedOperator& op) {
  DiagonalSplit split{NumberPolynomial(op.truncation_order()),
                      NormalOrderedOperator(op.truncation_order())};
  for (const auto& [key, series] : op.terms()) {
    if (key.p == key.q) {
      for (int j = 0; j <= op.truncation_order(); ++j)
        if (!series.at(j).is_zero()) split.diagonal.add(j, key.p, series.at(j));
    } else {
      split.off_diagonal.add_term(key.p, key.q, series);
    }
  }
  return split;
}

NormalOrderedOperator diagonal_operator(const NumberPolynomial& poly, int truncation_order) {
  NormalOrderedOperator out(truncation_order);
  for (int j = 0; j <= std::min(truncation_order, poly.truncation_order()); ++j)
    for (int i = 0; i <= poly.degree(j); ++i) out.add_term(i, i, j, poly.coefficient(j, i));
  return out;
}

}  // namespace weylpert
