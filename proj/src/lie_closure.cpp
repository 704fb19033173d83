#include "weylpert/lie_closure.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

#include "weylpert/errors.hpp"

namespace weylpert {

LieBasisElement LieBasisElement::make(int lambda_power, int high, int low, Parity parity,
                                      int truncation_order) {
  if (high <= low || low < 0) throw std::domain_error("Lie basis element requires p > q >= 0");
  NormalOrderedOperator value =
      NormalOrderedOperator::monomial(high, low, truncation_order, Radical2Scalar(1), lambda_power);
  Radical2Scalar mirror = parity == Parity::antisymmetric ? Radical2Scalar(-1) : Radical2Scalar(1);
  value += NormalOrderedOperator::monomial(low, high, truncation_order, mirror, lambda_power);
  return LieBasisElement{lambda_power, high, low, parity, value};
}

std::optional<std::size_t> LieAlgebra::find(int lambda_power, int high, int low,
                                            Parity parity) const {
  for (std::size_t i = 0; i < graded.size(); ++i) {
    const auto& e = graded[i];
    if (e.lambda_power == lambda_power && e.high == high && e.low == low && e.parity == parity)
      return i + 3;
  }
  return std::nullopt;
}

NormalOrderedOperator LieAlgebra::basis_value(std::size_t index) const {
  switch (index) {
    case kH0:
      return h0;
    case kHn:
      return hn;
    case kCentral:
      return NormalOrderedOperator::identity(order);
    default:
      return graded.at(index - 3).value;
  }
}

namespace {

using GradedKey = std::tuple<int, int, int>;  // (lambda_power, p, q) with p > q

void collect_off_diagonal_keys(const NormalOrderedOperator& op, int max_order,
                               std::set<GradedKey>& out) {
  for (const auto& [key, series] : op.terms()) {
    if (key.p == key.q) continue;
    int p = std::max(key.p, key.q), q = std::min(key.p, key.q);
    for (int j = 1; j <= max_order; ++j)
      if (!series.at(j).is_zero()) out.insert({j, p, q});
  }
}

void sort_canonical(std::vector<LieBasisElement>& graded) {
  std::sort(graded.begin(), graded.end(), [](const LieBasisElement& a, const LieBasisElement& b) {
    if (a.lambda_power != b.lambda_power) return a.lambda_power < b.lambda_power;
    if (a.high + a.low != b.high + b.low) return a.high + a.low > b.high + b.low;
    if (a.high != b.high) return a.high > b.high;
    return a.parity == Parity::antisymmetric && b.parity == Parity::symmetric;
  });
}

}  // namespace

LieAlgebra generate_algebra(int n, int k) {
  if (n < 1) throw ValidationError("potential power must be >= 1");
  if (k < 1) throw ValidationError("lambda order must be >= 1");

  LieAlgebra alg{n, k, harmonic_hamiltonian(k),
                 anharmonic_hamiltonian(static_cast<unsigned>(n), k), {}};

  if (n <= 2) {
    // Harmonic cases close with four elements: the symmetric partner of the
    // single antisymmetric generator lies in the span of {H0, Hn}.
    alg.graded.push_back(LieBasisElement::make(1, n, 0, Parity::antisymmetric, k));
    return alg;
  }

  std::set<GradedKey> keys;
  collect_off_diagonal_keys(commutator(alg.h0, alg.hn), k, keys);

  std::vector<NormalOrderedOperator> values{alg.h0, alg.hn};
  std::set<GradedKey> expanded;
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<GradedKey> frontier;
    for (const auto& key : keys)
      if (!expanded.count(key)) frontier.push_back(key);
    for (const auto& key : frontier) {
      expanded.insert(key);
      auto [j, p, q] = key;
      for (Parity parity : {Parity::antisymmetric, Parity::symmetric})
        values.push_back(LieBasisElement::make(j, p, q, parity, k).value);
    }
    // commute every element against every element; new off-diagonal support
    // within the truncation order extends the basis
    std::size_t before = keys.size();
    for (std::size_t a = 0; a < values.size(); ++a)
      for (std::size_t b = a + 1; b < values.size(); ++b)
        collect_off_diagonal_keys(commutator(values[a], values[b]), k, keys);
    if (keys.size() > before) grew = true;
  }

  for (const auto& [j, p, q] : keys)
    for (Parity parity : {Parity::antisymmetric, Parity::symmetric})
      alg.graded.push_back(LieBasisElement::make(j, p, q, parity, k));
  sort_canonical(alg.graded);
  return alg;
}

std::size_t count_generators(int n) {
  if (n < 3)
    throw ValidationError(
        "generator count formula applies to n >= 3; the n = 1, 2 algebras close "
        "with 4 elements (see exact_harmonic)");
  std::size_t kappa = static_cast<std::size_t>((n + 1) / 2);  // ceil(n/2)
  return (kappa + 1) * kappa + 3;
}

BasisExpansion expand_in_basis(const LieAlgebra& alg, const NormalOrderedOperator& op) {
  int k = alg.order;
  BasisExpansion expansion(k);
  NormalOrderedOperator rest = op.truncated(k);

  // Graded elements: each (j,p,q) pair supports exactly the two parities, so
  // coordinates come from the half-sum/half-difference of the two monomial
  // coefficients.
  Radical2Scalar half{make_rational(1, 2)};
  for (std::size_t i = 0; i < alg.graded.size(); ++i) {
    const auto& e = alg.graded[i];
    if (e.parity != Parity::antisymmetric) continue;
    int j = e.lambda_power;
    Radical2Scalar hi = rest.coefficient(e.high, e.low, j);
    Radical2Scalar lo = rest.coefficient(e.low, e.high, j);
    Radical2Scalar c_minus = (hi - lo) * half;
    Radical2Scalar c_plus = (hi + lo) * half;
    if (!c_minus.is_zero()) {
      auto idx = alg.find(j, e.high, e.low, Parity::antisymmetric);
      expansion.coords.emplace(*idx, LambdaSeries::constant(c_minus, k));
      NormalOrderedOperator v = alg.basis_value(*idx);
      v.scale(c_minus);
      rest -= v;
    }
    if (!c_plus.is_zero()) {
      if (auto idx = alg.find(j, e.high, e.low, Parity::symmetric)) {
        expansion.coords.emplace(*idx, LambdaSeries::constant(c_plus, k));
        NormalOrderedOperator v = alg.basis_value(*idx);
        v.scale(c_plus);
        rest -= v;
      }
    }
  }

  // Off-diagonal leftovers proportional to the potential part of Hn − H0
  // absorb into lambda-carrying coordinates on {Hn, H0}; this is how the
  // four-element harmonic algebras close.
  NormalOrderedOperator potential = alg.hn - alg.h0;  // lambda^1-homogeneous
  NormalOrderedOperator potential_off = potential.off_diagonal_part();
  if (!potential_off.is_zero()) {
    const auto& [ref_key, ref_series] = *potential_off.terms().begin();
    Radical2Scalar ref = ref_series.at(1);
    for (int j = 1; j <= k; ++j) {
      NormalOrderedOperator leftover = rest.lambda_slice(j).off_diagonal_part();
      if (leftover.is_zero()) continue;
      Radical2Scalar s = leftover.coefficient(ref_key.p, ref_key.q, j) / ref;
      if (s.is_zero()) continue;
      NormalOrderedOperator candidate = potential_off.lambda_shifted(j - 1);
      candidate.scale(s);
      if (!(candidate == leftover)) continue;
      LambdaSeries coeff = LambdaSeries::term(j - 1, s, k);
      auto add_coord = [&](std::size_t index, const LambdaSeries& c) {
        auto [it, inserted] = expansion.coords.emplace(index, c);
        if (!inserted) it->second += c;
      };
      add_coord(LieAlgebra::kHn, coeff);
      LambdaSeries neg = coeff;
      neg.scale(Radical2Scalar(-1));
      add_coord(LieAlgebra::kH0, neg);
      NormalOrderedOperator shift = potential.lambda_shifted(j - 1);
      shift.scale(s);
      rest -= shift;
    }
  }

  auto split = to_number_polynomial(rest);
  expansion.central = split.diagonal;
  expansion.residual = split.off_diagonal;
  return expansion;
}

StructureConstants structure_constants(const LieAlgebra& alg) {
  StructureConstants out;
  for (std::size_t i = 0; i < alg.size(); ++i) {
    for (std::size_t j = 0; j < alg.size(); ++j) {
      if (i == j) continue;
      NormalOrderedOperator comm = commutator(alg.basis_value(i), alg.basis_value(j));
      BasisExpansion expansion = expand_in_basis(alg, comm);
      if (!expansion.residual.is_zero())
        throw std::logic_error("algebra is not closed: commutator (" + std::to_string(i) + "," +
                               std::to_string(j) + ") leaves residual " +
                               expansion.residual.to_string());
      out.emplace(std::make_pair(i, j), std::move(expansion));
    }
  }
  return out;
}

}  // namespace weylpert
