#pragma once

#include <gmpxx.h>

#include <string>

namespace esum {

// Exact arbitrary-precision arithmetic substrate. GMP keeps mpq values in
// lowest terms with positive denominator after every arithmetic operation;
// construction from a raw num/den pair must go through make_rational, which
// canonicalizes.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

// "a/b", or "a" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Integer pow_integer(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// base^e for integer e of either sign; e < 0 requires base != 0.
inline Rational pow_rational(const Rational& base, long e) {
  if (e >= 0) {
    Rational r(pow_integer(base.get_num(), static_cast<unsigned long>(e)),
               pow_integer(base.get_den(), static_cast<unsigned long>(e)));
    r.canonicalize();
    return r;
  }
  Rational r(pow_integer(base.get_den(), static_cast<unsigned long>(-e)),
             pow_integer(base.get_num(), static_cast<unsigned long>(-e)));
  r.canonicalize();
  return r;
}

}  // namespace esum
