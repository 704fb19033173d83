#include "weylpert/normal_ordered.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace weylpert {

NormalOrderedOperator NormalOrderedOperator::monomial(int p, int q, int truncation_order,
                                                      const Radical2Scalar& coeff,
                                                      int lambda_power) {
  NormalOrderedOperator op(truncation_order);
  op.add_term(p, q, lambda_power, coeff);
  return op;
}

int NormalOrderedOperator::max_power() const {
  int w = 0;
  for (const auto& [key, series] : terms_) w = std::max({w, key.p, key.q});
  return w;
}

LambdaSeries NormalOrderedOperator::coefficient(int p, int q) const {
  auto it = terms_.find({p, q});
  if (it == terms_.end()) return LambdaSeries(truncation_order_);
  return it->second;
}

Radical2Scalar NormalOrderedOperator::coefficient(int p, int q, int lambda_power) const {
  auto it = terms_.find({p, q});
  if (it == terms_.end() || lambda_power > truncation_order_) return Radical2Scalar();
  return it->second.at(lambda_power);
}

void NormalOrderedOperator::prune(TermMap::iterator it) {
  if (it != terms_.end() && it->second.is_zero()) terms_.erase(it);
}

void NormalOrderedOperator::add_term(int p, int q, const LambdaSeries& series) {
  auto [it, inserted] = terms_.try_emplace({p, q}, series.truncated(truncation_order_));
  if (!inserted) it->second += series.truncated(truncation_order_);
  prune(it);
}

void NormalOrderedOperator::add_term(int p, int q, int lambda_power, const Radical2Scalar& coeff) {
  if (lambda_power > truncation_order_ || coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({p, q}, LambdaSeries(truncation_order_));
  it->second.add(lambda_power, coeff);
  prune(it);
}

NormalOrderedOperator& NormalOrderedOperator::operator+=(const NormalOrderedOperator& o) {
  if (o.truncation_order_ < truncation_order_) *this = truncated(o.truncation_order_);
  for (const auto& [key, series] : o.terms_) add_term(key.p, key.q, series);
  return *this;
}

NormalOrderedOperator& NormalOrderedOperator::operator-=(const NormalOrderedOperator& o) {
  if (o.truncation_order_ < truncation_order_) *this = truncated(o.truncation_order_);
  for (const auto& [key, series] : o.terms_) {
    LambdaSeries neg = series;
    neg.scale(Radical2Scalar(-1));
    add_term(key.p, key.q, neg);
  }
  return *this;
}

NormalOrderedOperator NormalOrderedOperator::operator-() const {
  NormalOrderedOperator out(truncation_order_);
  for (const auto& [key, series] : terms_) {
    LambdaSeries neg = series;
    neg.scale(Radical2Scalar(-1));
    out.terms_.emplace(key, neg);
  }
  return out;
}

NormalOrderedOperator& NormalOrderedOperator::scale(const Radical2Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, series] : terms_) series.scale(c);
  return *this;
}

NormalOrderedOperator& NormalOrderedOperator::scale(const LambdaSeries& s) {
  NormalOrderedOperator out(truncation_order_);
  for (const auto& [key, series] : terms_) out.add_term(key.p, key.q, series * s);
  return *this = out;
}

NormalOrderedOperator NormalOrderedOperator::lambda_shifted(int shift) const {
  NormalOrderedOperator out(truncation_order_);
  for (const auto& [key, series] : terms_) out.add_term(key.p, key.q, series.shifted(shift));
  return out;
}

NormalOrderedOperator NormalOrderedOperator::truncated(int new_order) const {
  NormalOrderedOperator out(new_order);
  for (const auto& [key, series] : terms_) out.add_term(key.p, key.q, series.truncated(new_order));
  return out;
}

NormalOrderedOperator NormalOrderedOperator::lambda_slice(int lambda_power) const {
  NormalOrderedOperator out(truncation_order_);
  for (const auto& [key, series] : terms_)
    out.add_term(key.p, key.q, lambda_power, series.at(lambda_power));
  return out;
}

NormalOrderedOperator NormalOrderedOperator::diagonal_part() const {
  NormalOrderedOperator out(truncation_order_);
  for (const auto& [key, series] : terms_)
    if (key.p == key.q) out.add_term(key.p, key.q, series);
  return out;
}

NormalOrderedOperator NormalOrderedOperator::off_diagonal_part() const {
  NormalOrderedOperator out(truncation_order_);
  for (const auto& [key, series] : terms_)
    if (key.p != key.q) out.add_term(key.p, key.q, series);
  return out;
}

NormalOrderedOperator NormalOrderedOperator::dagger() const {
  NormalOrderedOperator out(truncation_order_);
  for (const auto& [key, series] : terms_) out.add_term(key.q, key.p, series);
  return out;
}

NormalOrderedOperator multiply(const NormalOrderedOperator& lhs, const NormalOrderedOperator& rhs) {
  int order = std::min(lhs.truncation_order(), rhs.truncation_order());
  NormalOrderedOperator out(order);
  for (const auto& [lk, ls] : lhs.terms()) {
    for (const auto& [rk, rs] : rhs.terms()) {
      LambdaSeries series = ls.truncated(order) * rs.truncated(order);
      if (series.is_zero()) continue;
      int kmax = std::min(lk.q, rk.p);
      for (int k = 0; k <= kmax; ++k) {
        Rational c = Rational(factorial(static_cast<unsigned long>(k))) *
                     Rational(binomial(static_cast<unsigned long>(lk.q), static_cast<unsigned long>(k))) *
                     Rational(binomial(static_cast<unsigned long>(rk.p), static_cast<unsigned long>(k)));
        LambdaSeries scaled = series;
        scaled.scale(Radical2Scalar(c));
        out.add_term(lk.p + rk.p - k, lk.q + rk.q - k, scaled);
      }
    }
  }
  return out;
}

NormalOrderedOperator commutator(const NormalOrderedOperator& lhs,
                                 const NormalOrderedOperator& rhs) {
  return multiply(lhs, rhs) - multiply(rhs, lhs);
}

std::string NormalOrderedOperator::to_string() const {
  if (terms_.empty()) return "0";
  // canonical rendering: lambda-power ascending, then p desc, q desc
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j <= truncation_order_; ++j) {
    std::vector<std::pair<MonomialKey, Radical2Scalar>> slice;
    for (const auto& [key, series] : terms_)
      if (!series.at(j).is_zero()) slice.push_back({key, series.at(j)});
    std::sort(slice.begin(), slice.end(), [](const auto& a, const auto& b) {
      if (a.first.p != b.first.p) return a.first.p > b.first.p;
      return a.first.q > b.first.q;
    });
    for (const auto& [key, c] : slice) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c.to_string() << ")";
      if (j > 0) os << "·λ" << (j > 1 ? "^" + std::to_string(j) : "");
      if (key.p > 0) os << "·a†" << (key.p > 1 ? "^" + std::to_string(key.p) : "");
      if (key.q > 0) os << "·a" << (key.q > 1 ? "^" + std::to_string(key.q) : "");
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const NormalOrderedOperator& op) {
  return os << op.to_string();
}

}  // namespace weylpert
