#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "weylpert/weyl_core.hpp"

namespace weylpert {

enum class Parity { antisymmetric, symmetric };

// Signed generator lambda^j (a†^p a^q ∓ a†^q a^p) with p > q ≥ 0.
// Antisymmetric elements are anti-Hermitian, symmetric ones Hermitian.
struct LieBasisElement {
  int lambda_power = 1;
  int high = 0;  // p
  int low = 0;   // q
  Parity parity = Parity::antisymmetric;
  NormalOrderedOperator value;

  static LieBasisElement make(int lambda_power, int high, int low, Parity parity,
                              int truncation_order);
};

// Truncated Lie algebra generated by H0 and Hn with lambda^(k+1) = 0.
// Basis indexing: 0 = H0, 1 = Hn, 2 = I (central), 3.. = graded elements in
// canonical order (lambda asc, p+q desc, p desc, '-' before '+').
struct LieAlgebra {
  int potential_power = 0;
  int order = 1;
  NormalOrderedOperator h0;
  NormalOrderedOperator hn;
  std::vector<LieBasisElement> graded;

  std::size_t size() const { return graded.size() + 3; }
  static constexpr std::size_t kH0 = 0;
  static constexpr std::size_t kHn = 1;
  static constexpr std::size_t kCentral = 2;

  // Index into the full basis (>= 3), or nullopt.
  std::optional<std::size_t> find(int lambda_power, int high, int low, Parity parity) const;
  NormalOrderedOperator basis_value(std::size_t index) const;
};

// Builds the closed basis by breadth-first commutation of {H0, Hn}, keeping
// lambda-powers ≤ k and completing parities.  For n ∈ {1,2} the algebra is
// the 4-element closed one: {H0, Hn, lambda(a†^n − a^n), I}.
LieAlgebra generate_algebra(int n, int k);

// Generator count for order-1 algebras, n ≥ 3: (κ+1)κ + 3 with κ = ⌈n/2⌉.
// n < 3 throws ValidationError (those cases close exactly; see
// exact_harmonic).
std::size_t count_generators(int n);

// A commutator expanded over the algebra: scalar (or, for the harmonic
// cases, lambda-carrying) coordinates on basis elements, diagonal content
// routed to the central number-operator sector, and whatever could not be
// expressed.  central's constant row is the coordinate on I.
struct BasisExpansion {
  std::map<std::size_t, LambdaSeries> coords;
  NumberPolynomial central;
  NormalOrderedOperator residual;

  BasisExpansion(int truncation_order)
      : central(truncation_order), residual(truncation_order) {}
};

BasisExpansion expand_in_basis(const LieAlgebra& alg, const NormalOrderedOperator& op);

using StructureConstants = std::map<std::pair<std::size_t, std::size_t>, BasisExpansion>;

// Commutators of all ordered basis pairs expanded in the basis.  Throws
// if any expansion leaves a nonzero residual (the algebra is not closed).
StructureConstants structure_constants(const LieAlgebra& alg);

}  // namespace weylpert
