#pragma once

#include <random>

#include "weylpert/normal_ordered.hpp"

namespace weylpert::testing {

class RandomOps {
 public:
  explicit RandomOps(unsigned seed) : rng_(seed) {}

  Rational rational() {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    return make_rational(num(rng_), den(rng_));
  }

  Radical2Scalar scalar(bool allow_radical = true) {
    Radical2Scalar s{rational()};
    if (allow_radical && std::uniform_int_distribution<int>(0, 2)(rng_) == 0)
      s.rad = rational();
    return s;
  }

  Radical2Scalar nonzero_scalar() {
    for (;;) {
      Radical2Scalar s = scalar();
      if (!s.is_zero()) return s;
    }
  }

  NormalOrderedOperator op(int max_power, int truncation_order, int terms) {
    std::uniform_int_distribution<int> power(0, max_power);
    std::uniform_int_distribution<int> lambda(0, truncation_order);
    NormalOrderedOperator out(truncation_order);
    for (int t = 0; t < terms; ++t)
      out.add_term(power(rng_), power(rng_), lambda(rng_), scalar());
    return out;
  }

  std::mt19937& rng() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace weylpert::testing
