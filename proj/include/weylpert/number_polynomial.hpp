#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "weylpert/radical2.hpp"

namespace weylpert {

// Per-lambda-order polynomial in the number operator N, stored in the
// falling-factorial basis { i!·C(N,i) }.  That basis is the natural one
// here because a†^i a^i = i!·C(N,i) exactly, so diagonal operator content
// maps onto coefficients without any conversion.
class NumberPolynomial {
 public:
  explicit NumberPolynomial(int truncation_order)
      : orders_(static_cast<std::size_t>(truncation_order) + 1) {}

  int truncation_order() const { return static_cast<int>(orders_.size()) - 1; }

  void add(int lambda_power, int basis_index, const Radical2Scalar& c);
  Radical2Scalar coefficient(int lambda_power, int basis_index) const;
  int degree(int lambda_power) const;  // -1 for the zero polynomial

  bool is_zero() const;
  bool order_is_zero(int lambda_power) const;

  NumberPolynomial& operator+=(const NumberPolynomial& o);
  NumberPolynomial& scale(const Radical2Scalar& c);
  // Multiply by lambda^shift.
  NumberPolynomial shifted(int shift) const;

  // Exact value of the lambda^j polynomial at integer level n.
  Radical2Scalar eval_order(int lambda_power, unsigned level) const;
  // Exact sum over orders at rational lambda (lambda^0 term included).
  Radical2Scalar eval_exact(unsigned level, const Rational& lambda) const;
  double eval(unsigned level, double lambda) const;

  // Coefficients of the same lambda^j polynomial written in powers of N.
  std::vector<Radical2Scalar> monomial_coefficients(int lambda_power) const;
  // Inverse basis change; exact round-trip with monomial_coefficients.
  static std::vector<Radical2Scalar> binomial_from_monomial(
      const std::vector<Radical2Scalar>& monomial);

  std::string to_string() const;

  friend bool operator==(const NumberPolynomial& a, const NumberPolynomial& b);

 private:
  // orders_[j][i] multiplies lambda^j · i!·C(N,i)
  std::vector<std::vector<Radical2Scalar>> orders_;
};

std::ostream& operator<<(std::ostream& os, const NumberPolynomial& poly);

}  // namespace weylpert
