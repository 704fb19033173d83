#include <doctest.h>

#include <cmath>

#include "random_ops.hpp"
#include "weylpert/number_polynomial.hpp"
#include "weylpert/oracle.hpp"
#include "weylpert/weyl_core.hpp"

using namespace weylpert;
using testing::RandomOps;

TEST_CASE("field laws in Q(sqrt 2)") {
  RandomOps gen(11);
  for (int i = 0; i < 200; ++i) {
    Radical2Scalar a = gen.scalar(), b = gen.scalar(), c = gen.scalar();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    Radical2Scalar d = gen.nonzero_scalar();
    CHECK((a / d) * d == a);
  }
}

TEST_CASE("product associativity on random operators") {
  RandomOps gen(23);
  for (int i = 0; i < 200; ++i) {
    NormalOrderedOperator p = gen.op(6, 2, 3);
    NormalOrderedOperator q = gen.op(6, 2, 3);
    NormalOrderedOperator r = gen.op(6, 2, 3);
    CHECK(multiply(multiply(p, q), r) == multiply(p, multiply(q, r)));
  }
}

TEST_CASE("commutator antisymmetry, bilinearity and the Jacobi identity") {
  RandomOps gen(37);
  for (int i = 0; i < 200; ++i) {
    NormalOrderedOperator p = gen.op(5, 2, 2);
    NormalOrderedOperator q = gen.op(5, 2, 2);
    NormalOrderedOperator r = gen.op(5, 2, 2);
    CHECK(commutator(p, q) == -commutator(q, p));

    Radical2Scalar c = gen.scalar();
    NormalOrderedOperator scaled = p;
    scaled.scale(c);
    NormalOrderedOperator lhs = commutator(scaled + q, r);
    NormalOrderedOperator rhs = commutator(p, r);
    rhs.scale(c);
    rhs += commutator(q, r);
    CHECK(lhs == rhs);

    NormalOrderedOperator jacobi = commutator(p, commutator(q, r)) +
                                   commutator(q, commutator(r, p)) +
                                   commutator(r, commutator(p, q));
    CHECK(jacobi.is_zero());
  }
}

TEST_CASE("dagger is an involutive anti-homomorphism") {
  RandomOps gen(41);
  for (int i = 0; i < 200; ++i) {
    NormalOrderedOperator p = gen.op(6, 2, 3);
    NormalOrderedOperator q = gen.op(6, 2, 3);
    CHECK(p.dagger().dagger() == p);
    CHECK(multiply(p, q).dagger() == multiply(q.dagger(), p.dagger()));
  }
}

TEST_CASE("binomial expansion equals the repeated product") {
  NormalOrderedOperator sum =
      NormalOrderedOperator::monomial(1, 0, 0) + NormalOrderedOperator::monomial(0, 1, 0);
  NormalOrderedOperator product = NormalOrderedOperator::identity(0);
  for (unsigned n = 0; n <= 8; ++n) {
    CHECK(expand_power(n) == product);
    product = multiply(product, sum);
  }
}

TEST_CASE("hermitian operators have symmetric matrices") {
  RandomOps gen(53);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    NormalOrderedOperator p = gen.op(5, 1, 3);
    NormalOrderedOperator hermitian = p + p.dagger();
    FockMatrix fm = build_matrix(hermitian, 0.37, 16);
    CHECK((fm.entries - fm.entries.transpose()).cwiseAbs().maxCoeff() == 0.0);
    if (!(p == p.dagger())) {
      FockMatrix raw = build_matrix(p, 0.37, 16);
      CHECK((raw.entries - raw.entries.transpose()).cwiseAbs().maxCoeff() > 0.0);
      ++checked;
    }
  }
  CHECK(checked > 100);  // the generator rarely produces Hermitian operators by chance
}

TEST_CASE("matrix representation is a homomorphism away from the truncation band") {
  RandomOps gen(67);
  const int dim = 28;  // must exceed twice the product's largest power (up to 12)
  for (int i = 0; i < 200; ++i) {
    // lambda-order 0 so the only truncation in play is the Fock dimension
    NormalOrderedOperator p = gen.op(6, 0, 3);
    NormalOrderedOperator q = gen.op(6, 0, 3);
    int w = std::max(p.max_power(), q.max_power());
    int safe = dim - 2 * w;
    if (safe <= 0) continue;
    FockMatrix pm = build_matrix(p, 0.41, dim);
    FockMatrix qm = build_matrix(q, 0.41, dim);
    FockMatrix prod = build_matrix(multiply(p, q), 0.41, dim);
    Eigen::MatrixXd direct = pm.entries * qm.entries;
    for (int r = 0; r < safe; ++r) {
      for (int s = 0; s < safe; ++s) {
        double expected = prod.entries(r, s);
        double actual = direct(r, s);
        double tolerance = 1e-10 * std::max(1.0, std::abs(expected));
        CHECK(std::abs(expected - actual) <= tolerance);
      }
    }
  }
}

TEST_CASE("number polynomial basis conversions round-trip") {
  RandomOps gen(79);
  for (int i = 0; i < 200; ++i) {
    NumberPolynomial poly(1);
    std::uniform_int_distribution<int> degree(0, 6);
    int d = degree(gen.rng());
    for (int b = 0; b <= d; ++b) poly.add(0, b, gen.scalar());
    auto monomial = poly.monomial_coefficients(0);
    auto back = NumberPolynomial::binomial_from_monomial(monomial);
    for (int b = 0; b <= d; ++b) {
      Radical2Scalar expected = poly.coefficient(0, b);
      Radical2Scalar actual = b < static_cast<int>(back.size()) ? back[static_cast<std::size_t>(b)]
                                                                : Radical2Scalar(0);
      CHECK(expected == actual);
    }
  }
}

TEST_CASE("operator equality is canonical") {
  RandomOps gen(97);
  for (int i = 0; i < 100; ++i) {
    NormalOrderedOperator p = gen.op(5, 2, 4);
    NormalOrderedOperator q = gen.op(5, 2, 4);
    NormalOrderedOperator diff = p + q - q;
    CHECK(diff == p);
    CHECK((p - p).is_zero());
  }
}
