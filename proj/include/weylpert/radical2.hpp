#pragma once

#include <cmath>
#include <ostream>
#include <string>

#include "weylpert/rational.hpp"

namespace weylpert {

// Element a + b*sqrt(2) of the quadratic field Q(sqrt(2)).  This is the
// coefficient field for all symbolic work: position operators carry factors
// 1/sqrt(2)^n, so mixed half-integer powers of two accumulate and a plain
// rational is not enough.
struct Radical2Scalar {
  Rational rat;  // rational part
  Rational rad;  // coefficient of sqrt(2)

  Radical2Scalar() : rat(0), rad(0) {}
  Radical2Scalar(const Rational& rational_part) : rat(rational_part), rad(0) {}
  Radical2Scalar(long value) : rat(value), rad(0) {}
  Radical2Scalar(int value) : rat(value), rad(0) {}
  Radical2Scalar(const Rational& rational_part, const Rational& radical_part)
      : rat(rational_part), rad(radical_part) {}

  static Radical2Scalar sqrt2() { return Radical2Scalar(Rational(0), Rational(1)); }

  // Exact 2^(k/2) for any integer k: even k is purely rational, odd k is
  // 2^((k-1)/2) * sqrt(2).
  static Radical2Scalar half_power_of_two(long k) {
    if (k % 2 == 0) return Radical2Scalar(rational_pow2(k / 2));
    long e = (k - 1) / 2;  // exact for negative odd k too: k-1 is even
    return Radical2Scalar(Rational(0), rational_pow2(e));
  }

  bool is_zero() const { return rat == 0 && rad == 0; }
  bool is_rational() const { return rad == 0; }

  Radical2Scalar operator-() const { return Radical2Scalar(-rat, -rad); }

  Radical2Scalar& operator+=(const Radical2Scalar& o) {
    rat += o.rat;
    rad += o.rad;
    return *this;
  }
  Radical2Scalar& operator-=(const Radical2Scalar& o) {
    rat -= o.rat;
    rad -= o.rad;
    return *this;
  }
  Radical2Scalar& operator*=(const Radical2Scalar& o) {
    // (a + b s)(c + d s) = (ac + 2bd) + (ad + bc) s,  s^2 = 2
    Rational new_rat = rat * o.rat + 2 * rad * o.rad;
    Rational new_rad = rat * o.rad + rad * o.rat;
    rat = new_rat;
    rad = new_rad;
    return *this;
  }
  Radical2Scalar& operator/=(const Radical2Scalar& o);

  double to_double() const {
    return rat.get_d() + rad.get_d() * std::sqrt(2.0);
  }

  // "p/q", "r/s√2", or "p/q+r/s√2" (exact, lossless).
  std::string to_string() const;
  static Radical2Scalar parse(const std::string& text);
};

inline Radical2Scalar operator+(Radical2Scalar a, const Radical2Scalar& b) { return a += b; }
inline Radical2Scalar operator-(Radical2Scalar a, const Radical2Scalar& b) { return a -= b; }
inline Radical2Scalar operator*(Radical2Scalar a, const Radical2Scalar& b) { return a *= b; }
inline Radical2Scalar operator/(Radical2Scalar a, const Radical2Scalar& b) { return a /= b; }

inline bool operator==(const Radical2Scalar& a, const Radical2Scalar& b) {
  return a.rat == b.rat && a.rad == b.rad;
}
inline bool operator!=(const Radical2Scalar& a, const Radical2Scalar& b) { return !(a == b); }

std::ostream& operator<<(std::ostream& os, const Radical2Scalar& v);

}  // namespace weylpert
