#include "weylpert/number_polynomial.hpp"

#include <sstream>

namespace weylpert {

namespace {

// Monomial coefficients of the falling factorial N(N−1)...(N−i+1).
std::vector<Radical2Scalar> falling_factorial_monomials(int i) {
  std::vector<Radical2Scalar> poly{Radical2Scalar(1)};  // degree 0: constant 1
  for (int t = 0; t < i; ++t) {
    std::vector<Radical2Scalar> next(poly.size() + 1);
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] += poly[d];                          // N * poly
      next[d] += poly[d] * Radical2Scalar(Rational(-t));  // −t * poly
    }
    poly = std::move(next);
  }
  return poly;
}

Radical2Scalar falling_factorial_value(unsigned level, int i) {
  Rational v(1);
  for (int t = 0; t < i; ++t) {
    long factor = static_cast<long>(level) - t;
    if (factor == 0) return Radical2Scalar(0);
    v *= Rational(factor);
  }
  return Radical2Scalar(v);
}

}  // namespace

void NumberPolynomial::add(int lambda_power, int basis_index, const Radical2Scalar& c) {
  auto& row = orders_[static_cast<std::size_t>(lambda_power)];
  if (row.size() <= static_cast<std::size_t>(basis_index))
    row.resize(static_cast<std::size_t>(basis_index) + 1);
  row[static_cast<std::size_t>(basis_index)] += c;
}

Radical2Scalar NumberPolynomial::coefficient(int lambda_power, int basis_index) const {
  if (lambda_power > truncation_order()) return Radical2Scalar();
  const auto& row = orders_[static_cast<std::size_t>(lambda_power)];
  if (static_cast<std::size_t>(basis_index) >= row.size()) return Radical2Scalar();
  return row[static_cast<std::size_t>(basis_index)];
}

int NumberPolynomial::degree(int lambda_power) const {
  const auto& row = orders_[static_cast<std::size_t>(lambda_power)];
  for (int i = static_cast<int>(row.size()) - 1; i >= 0; --i)
    if (!row[static_cast<std::size_t>(i)].is_zero()) return i;
  return -1;
}

bool NumberPolynomial::is_zero() const {
  for (int j = 0; j <= truncation_order(); ++j)
    if (!order_is_zero(j)) return false;
  return true;
}

bool NumberPolynomial::order_is_zero(int lambda_power) const {
  return degree(lambda_power) < 0;
}

NumberPolynomial& NumberPolynomial::operator+=(const NumberPolynomial& o) {
  for (int j = 0; j <= std::min(truncation_order(), o.truncation_order()); ++j)
    for (int i = 0; i <= o.degree(j); ++i) add(j, i, o.coefficient(j, i));
  return *this;
}

NumberPolynomial& NumberPolynomial::scale(const Radical2Scalar& c) {
  for (auto& row : orders_)
    for (auto& v : row) v *= c;
  return *this;
}

NumberPolynomial NumberPolynomial::shifted(int shift) const {
  NumberPolynomial out(truncation_order());
  for (int j = 0; j + shift <= truncation_order(); ++j)
    for (int i = 0; i <= degree(j); ++i) out.add(j + shift, i, coefficient(j, i));
  return out;
}

Radical2Scalar NumberPolynomial::eval_order(int lambda_power, unsigned level) const {
  Radical2Scalar acc;
  for (int i = 0; i <= degree(lambda_power); ++i)
    acc += coefficient(lambda_power, i) * falling_factorial_value(level, i);
  return acc;
}

Radical2Scalar NumberPolynomial::eval_exact(unsigned level, const Rational& lambda) const {
  Radical2Scalar acc;
  Radical2Scalar l{lambda};
  for (int j = truncation_order(); j >= 0; --j) acc = acc * l + eval_order(j, level);
  return acc;
}

double NumberPolynomial::eval(unsigned level, double lambda) const {
  double acc = 0.0;
  for (int j = truncation_order(); j >= 0; --j)
    acc = acc * lambda + eval_order(j, level).to_double();
  return acc;
}

std::vector<Radical2Scalar> NumberPolynomial::monomial_coefficients(int lambda_power) const {
  int d = degree(lambda_power);
  std::vector<Radical2Scalar> out(static_cast<std::size_t>(std::max(d + 1, 1)));
  if (d < 0) return out;
  for (int i = 0; i <= d; ++i) {
    auto ff = falling_factorial_monomials(i);
    const Radical2Scalar c = coefficient(lambda_power, i);
    if (c.is_zero()) continue;
    for (std::size_t t = 0; t < ff.size(); ++t) out[t] += c * ff[t];
  }
  return out;
}

std::vector<Radical2Scalar> NumberPolynomial::binomial_from_monomial(
    const std::vector<Radical2Scalar>& monomial) {
  std::vector<Radical2Scalar> work = monomial;
  std::vector<Radical2Scalar> out(std::max<std::size_t>(work.size(), 1));
  // falling factorials are monic, so eliminate from the top degree down
  for (int i = static_cast<int>(work.size()) - 1; i >= 0; --i) {
    Radical2Scalar c = work[static_cast<std::size_t>(i)];
    out[static_cast<std::size_t>(i)] = c;
    if (c.is_zero()) continue;
    auto ff = falling_factorial_monomials(i);
    for (std::size_t t = 0; t < ff.size(); ++t) work[t] -= c * ff[t];
  }
  return out;
}

std::string NumberPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j <= truncation_order(); ++j) {
    for (int i = 0; i <= degree(j); ++i) {
      const Radical2Scalar c = coefficient(j, i);
      if (c.is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << c.to_string() << ")";
      if (j > 0) os << "·λ" << (j > 1 ? "^" + std::to_string(j) : "");
      if (i > 0) os << "·" << i << "!C(N," << i << ")";
    }
  }
  if (first) os << "0";
  return os.str();
}

bool operator==(const NumberPolynomial& a, const NumberPolynomial& b) {
  if (a.truncation_order() != b.truncation_order()) return false;
  for (int j = 0; j <= a.truncation_order(); ++j) {
    int d = std::max(a.degree(j), b.degree(j));
    for (int i = 0; i <= d; ++i)
      if (a.coefficient(j, i) != b.coefficient(j, i)) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const NumberPolynomial& poly) {
  return os << poly.to_string();
}

}  // namespace weylpert
