#include "esum/bigfloat.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace esum {

BigFloat BigFloat::of(long v, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_si(r.v_, v, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::of(const Rational& q, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::of(const Integer& n, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_z(r.v_, n.get_mpz_t(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pi(mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::euler_gamma(mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_const_euler(r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::ln_of(long v, mpfr_prec_t prec) {
  BigFloat r = of(v, prec);
  mpfr_log(r.v_, r.v_, MPFR_RNDN);
  return r;
}

namespace {
mpfr_prec_t join(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision(), b.precision());
}
}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(join(a, b));
  mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(join(a, b));
  mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(join(a, b));
  mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(join(a, b));
  mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::mul(long k) const {
  BigFloat r(precision());
  mpfr_mul_si(r.v_, v_, k, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::div(long k) const {
  BigFloat r(precision());
  mpfr_div_si(r.v_, v_, k, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow(long e) const {
  BigFloat r(precision());
  mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::abs() const {
  BigFloat r(precision());
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::log() const {
  BigFloat r(precision());
  mpfr_log(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string BigFloat::str(size_t digits) const {
  if (digits == 0) {
    digits = static_cast<size_t>(static_cast<double>(precision()) * 0.30103) + 1;
  }
  std::vector<char> buf(digits + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*R*e", static_cast<int>(digits), MPFR_RNDN, v_);
  return std::string(buf.data());
}

BigFloat pow2(long e, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_si_2exp(r.raw(), 1, static_cast<mpfr_exp_t>(e), MPFR_RNDN);
  return r;
}

}  // namespace esum
