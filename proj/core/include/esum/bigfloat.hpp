#pragma once

#include <mpfr.h>

#include <string>

#include "esum/rational.hpp"

namespace esum {

// RAII value type over mpfr_t. Every value carries an explicit binary
// precision; binary operations compute at the larger of the two operand
// precisions. Comparisons are exact on the stored values.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 64) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  static BigFloat of(long v, mpfr_prec_t prec);
  static BigFloat of(const Rational& q, mpfr_prec_t prec);
  static BigFloat of(const Integer& n, mpfr_prec_t prec);
  static BigFloat pi(mpfr_prec_t prec);
  static BigFloat euler_gamma(mpfr_prec_t prec);
  static BigFloat ln_of(long v, mpfr_prec_t prec);  // natural logarithm of v

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat operator-() const;

  BigFloat mul(long k) const;
  BigFloat div(long k) const;
  BigFloat pow(long e) const;  // integer exponent, either sign
  BigFloat abs() const;
  BigFloat log() const;

  int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return a.cmp(b) < 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return a.cmp(b) <= 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return a.cmp(b) > 0; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }

  // Decimal string carrying the full stated precision by default.
  std::string str(size_t digits = 0) const;

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

 private:
  mpfr_t v_;
};

// 2^-e at the given precision, for tolerance construction in tests.
BigFloat pow2(long e, mpfr_prec_t prec);

}  // namespace esum
