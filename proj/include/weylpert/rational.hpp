#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace weylpert {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

inline Integer factorial(unsigned long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

inline Integer pow2(unsigned long e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, e);
  return p;
}

// 2^e for any integer e, as an exact rational.
inline Rational rational_pow2(long e) {
  if (e >= 0) return Rational(pow2(static_cast<unsigned long>(e)));
  return make_rational(Integer(1), pow2(static_cast<unsigned long>(-e)));
}

// "p/q" (canonical GMP form; plain "p" when q = 1).
inline std::string to_string(const Rational& r) { return r.get_str(); }

// Accepts "p/q", integers, and plain decimals ("0.5" -> 1/2).
Rational rational_from_string(const std::string& text);

}  // namespace weylpert
