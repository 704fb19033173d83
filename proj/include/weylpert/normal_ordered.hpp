#pragma once

#include <compare>
#include <map>
#include <ostream>
#include <string>

#include "weylpert/lambda_series.hpp"

namespace weylpert {

// Normally ordered monomial a†^p a^q; the key is the normal order.
struct MonomialKey {
  int p = 0;  // creation power
  int q = 0;  // annihilation power
  auto operator<=>(const MonomialKey&) const = default;
};

// Sparse sum of normally ordered monomials with truncated lambda-series
// coefficients.  Canonical form: zero coefficients are never stored, so
// equality is plain map equality.
class NormalOrderedOperator {
 public:
  using TermMap = std::map<MonomialKey, LambdaSeries>;

  explicit NormalOrderedOperator(int truncation_order) : truncation_order_(truncation_order) {}

  static NormalOrderedOperator monomial(int p, int q, int truncation_order,
                                        const Radical2Scalar& coeff = Radical2Scalar(1),
                                        int lambda_power = 0);
  static NormalOrderedOperator identity(int truncation_order) {
    return monomial(0, 0, truncation_order);
  }

  int truncation_order() const { return truncation_order_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Largest ladder power appearing in any stored monomial.
  int max_power() const;

  LambdaSeries coefficient(int p, int q) const;  // zero series if absent
  Radical2Scalar coefficient(int p, int q, int lambda_power) const;

  void add_term(int p, int q, const LambdaSeries& series);
  void add_term(int p, int q, int lambda_power, const Radical2Scalar& coeff);

  NormalOrderedOperator& operator+=(const NormalOrderedOperator& o);
  NormalOrderedOperator& operator-=(const NormalOrderedOperator& o);
  NormalOrderedOperator operator-() const;

  NormalOrderedOperator& scale(const Radical2Scalar& c);
  NormalOrderedOperator& scale(const LambdaSeries& s);
  // Multiply every coefficient by lambda^shift.
  NormalOrderedOperator lambda_shifted(int shift) const;

  NormalOrderedOperator truncated(int new_order) const;

  // Keep only the lambda^j part (result still lives at the same truncation).
  NormalOrderedOperator lambda_slice(int lambda_power) const;
  NormalOrderedOperator diagonal_part() const;
  NormalOrderedOperator off_diagonal_part() const;

  NormalOrderedOperator dagger() const;

  std::string to_string() const;

  friend bool operator==(const NormalOrderedOperator& a, const NormalOrderedOperator& b) {
    return a.truncation_order_ == b.truncation_order_ && a.terms_ == b.terms_;
  }

 private:
  void prune(TermMap::iterator it);

  int truncation_order_;
  TermMap terms_;
};

inline NormalOrderedOperator operator+(NormalOrderedOperator a, const NormalOrderedOperator& b) {
  return a += b;
}
inline NormalOrderedOperator operator-(NormalOrderedOperator a, const NormalOrderedOperator& b) {
  return a -= b;
}

// Exact normally ordered product, truncated in lambda.  Monomial pairs
// combine through the closed-form contraction rule
//   a†^p a^q · a†^r a^s = sum_k k!·C(q,k)·C(r,k)·a†^(p+r−k) a^(q+s−k).
NormalOrderedOperator multiply(const NormalOrderedOperator& lhs, const NormalOrderedOperator& rhs);

NormalOrderedOperator commutator(const NormalOrderedOperator& lhs, const NormalOrderedOperator& rhs);

std::ostream& operator<<(std::ostream& os, const NormalOrderedOperator& op);

}  // namespace weylpert
