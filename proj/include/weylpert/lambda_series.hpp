#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "weylpert/radical2.hpp"

namespace weylpert {

// Truncated formal power series in the perturbation parameter: coefficients
// for lambda^0 .. lambda^K with lambda^(K+1) = 0.  Products drop everything
// past the truncation order; adding series of different orders truncates to
// the smaller one.
class LambdaSeries {
 public:
  explicit LambdaSeries(int truncation_order)
      : coeffs_(static_cast<std::size_t>(truncation_order) + 1) {}

  static LambdaSeries constant(const Radical2Scalar& c, int truncation_order) {
    LambdaSeries s(truncation_order);
    s.coeffs_[0] = c;
    return s;
  }

  static LambdaSeries term(int lambda_power, const Radical2Scalar& c, int truncation_order) {
    LambdaSeries s(truncation_order);
    if (lambda_power <= truncation_order) s.coeffs_[static_cast<std::size_t>(lambda_power)] = c;
    return s;
  }

  int truncation_order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const Radical2Scalar& at(int lambda_power) const {
    return coeffs_[static_cast<std::size_t>(lambda_power)];
  }
  void set(int lambda_power, const Radical2Scalar& c) {
    if (lambda_power <= truncation_order()) coeffs_[static_cast<std::size_t>(lambda_power)] = c;
  }
  void add(int lambda_power, const Radical2Scalar& c) {
    if (lambda_power <= truncation_order()) coeffs_[static_cast<std::size_t>(lambda_power)] += c;
  }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Radical2Scalar& c) { return c.is_zero(); });
  }

  LambdaSeries truncated(int new_order) const {
    LambdaSeries s(new_order);
    int n = std::min(new_order, truncation_order());
    for (int j = 0; j <= n; ++j) s.coeffs_[static_cast<std::size_t>(j)] = at(j);
    return s;
  }

  // Multiply by lambda^shift.
  LambdaSeries shifted(int shift) const {
    LambdaSeries s(truncation_order());
    for (int j = 0; j + shift <= truncation_order(); ++j)
      s.coeffs_[static_cast<std::size_t>(j + shift)] = at(j);
    return s;
  }

  LambdaSeries& operator+=(const LambdaSeries& o) {
    if (o.truncation_order() < truncation_order()) *this = truncated(o.truncation_order());
    for (int j = 0; j <= truncation_order(); ++j) coeffs_[static_cast<std::size_t>(j)] += o.at(j);
    return *this;
  }
  LambdaSeries& operator-=(const LambdaSeries& o) {
    if (o.truncation_order() < truncation_order()) *this = truncated(o.truncation_order());
    for (int j = 0; j <= truncation_order(); ++j) coeffs_[static_cast<std::size_t>(j)] -= o.at(j);
    return *this;
  }
  LambdaSeries& operator*=(const LambdaSeries& o) {
    int k = std::min(truncation_order(), o.truncation_order());
    LambdaSeries result(k);
    for (int i = 0; i <= k; ++i) {
      if (at(i).is_zero()) continue;
      for (int j = 0; i + j <= k; ++j) result.coeffs_[static_cast<std::size_t>(i + j)] += at(i) * o.at(j);
    }
    return *this = result;
  }

  LambdaSeries& scale(const Radical2Scalar& c) {
    for (auto& v : coeffs_) v *= c;
    return *this;
  }

  double evaluate(double lambda) const {
    double acc = 0.0;
    for (int j = truncation_order(); j >= 0; --j) acc = acc * lambda + at(j).to_double();
    return acc;
  }

  Radical2Scalar evaluate_exact(const Rational& lambda) const {
    Radical2Scalar acc;
    Radical2Scalar l{lambda};
    for (int j = truncation_order(); j >= 0; --j) acc = acc * l + at(j);
    return acc;
  }

  friend bool operator==(const LambdaSeries& a, const LambdaSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<Radical2Scalar> coeffs_;
};

inline LambdaSeries operator+(LambdaSeries a, const LambdaSeries& b) { return a += b; }
inline LambdaSeries operator-(LambdaSeries a, const LambdaSeries& b) { return a -= b; }
inline LambdaSeries operator*(LambdaSeries a, const LambdaSeries& b) { return a *= b; }

}  // namespace weylpert
