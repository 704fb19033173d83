#pragma once

#include "weylpert/normal_ordered.hpp"
#include "weylpert/number_polynomial.hpp"

namespace weylpert {

// Weyl binomial coefficient {n m}_k = n! / (2^k k! (m−k)! (n−m−k)!): the
// multiplicity of a†^(m−k) a^(n−m−k) in the normal ordering of (a+a†)^n.
// Requires 0 ≤ m ≤ n and 0 ≤ k ≤ min(m, n−m); throws std::domain_error
// otherwise.
Rational weyl_binomial(unsigned n, unsigned m, unsigned k);

// Normal ordering of (a + a†)^n at lambda-order 0.
NormalOrderedOperator expand_power(unsigned n, int truncation_order = 0);

// c · lambda^lambda_power · x^n with x = (a + a†)/sqrt(2).
NormalOrderedOperator position_power(unsigned n, int truncation_order, int lambda_power = 1,
                                     const Rational& coeff = Rational(1));

// a†a + 1/2.
NormalOrderedOperator harmonic_hamiltonian(int truncation_order);

// H0 + lambda · c · x^n.
NormalOrderedOperator anharmonic_hamiltonian(unsigned n, int truncation_order,
                                             const Rational& coeff = Rational(1));

struct DiagonalSplit {
  NumberPolynomial diagonal;
  NormalOrderedOperator off_diagonal;
};

// Splits an operator into its diagonal content — returned as a polynomial in
// the number operator via a†^j a^j = j!·C(N,j) — and the untouched
// off-diagonal remainder.
DiagonalSplit to_number_polynomial(const NormalOrderedOperator& op);

// Rebuilds the diagonal operator sum_j,i c_{j,i} · lambda^j · a†^i a^i.
NormalOrderedOperator diagonal_operator(const NumberPolynomial& poly, int truncation_order);

}  // namespace weylpert
