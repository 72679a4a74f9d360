#include "esum/zeta_numeric.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "esum/combinatorics.hpp"
#include "esum/error.hpp"

namespace esum {

namespace {

// Euler-Maclaurin tail at cutoff M:
//   sum_{n>M} n^-t = M^(1-t)/(t-1) - M^-t/2
//                  + sum_{k>=1} B_2k/(2k)! (t)(t+1)...(t+2k-2) M^(-t-2k+1)
// Terms are added until they drop below the target or stop shrinking.
BigFloat em_tail(long t, long M, mpfr_prec_t wp) {
  BigFloat Mf = BigFloat::of(M, wp);
  BigFloat tail = Mf.pow(1 - t).div(t - 1) - Mf.pow(-t).div(2);
  BigFloat target = pow2(-static_cast<long>(wp), wp);
  Rational rising(t);  // (t)(t+1)...(t+2k-2), grown incrementally
  BigFloat m_pow = Mf.pow(-t - 1);
  BigFloat m_step = Mf.pow(-2);
  BigFloat prev_mag(wp);
  bool have_prev = false;
  for (long k = 1; k <= 256; ++k) {
    Rational c = bernoulli(2 * k) / Rational(factorial(2 * k)) * rising;
    BigFloat term = BigFloat::of(c, wp) * m_pow;
    tail += term;
    BigFloat mag = term.abs();
    if (mag < target) break;
    if (have_prev && !(mag < prev_mag)) break;  // divergent regime reached
    prev_mag = mag;
    have_prev = true;
    rising *= Rational(t + 2 * k - 1) * Rational(t + 2 * k);
    m_pow = m_pow * m_step;
  }
  return tail;
}

std::mutex zeta_mutex;
std::map<std::pair<long, mpfr_prec_t>, BigFloat>& zeta_cache() {
  static std::map<std::pair<long, mpfr_prec_t>, BigFloat> cache;
  return cache;
}

}  // namespace

BigFloat zeta_numeric(long s, mpfr_prec_t prec) {
  if (s < 2) throw PreconditionError("zeta_numeric requires s >= 2");
  {
    std::lock_guard<std::mutex> lock(zeta_mutex);
    auto it = zeta_cache().find({s, prec});
    if (it != zeta_cache().end()) return it->second;
  }
  mpfr_prec_t wp = prec + 32;
  // Cutoff so that the Bernoulli terms reach 2^-wp well before the
  // expansion turns: term_k ~ 2 (t)_{2k-1} / ((2 pi M)^{2k} M^{t-1}).
  long M = 48 + static_cast<long>(wp) / 4;
  BigFloat partial(wp);
  for (long n = 1; n <= M; ++n) partial += BigFloat::of(n, wp).pow(-s);
  BigFloat value = partial + em_tail(s, M, wp);
  std::lock_guard<std::mutex> lock(zeta_mutex);
  return zeta_cache().emplace(std::make_pair(s, prec), value).first->second;
}

BigFloat zeta_tail(long t, long N, mpfr_prec_t prec) {
  if (t < 2) throw PreconditionError("zeta_tail requires t >= 2");
  if (N < 1) throw PreconditionError("zeta_tail requires N >= 1");
  return em_tail(t, N, prec + 32);
}

BigFloat power_log_tail(long t, long N, mpfr_prec_t prec) {
  if (t < 2 || N < 2) throw PreconditionError("power_log_tail requires t >= 2 and N >= 2");
  mpfr_prec_t wp = prec + 32;
  // f(x) = ln(x) x^-t; sum_{n>N} f(n) = int_N^inf f - f(N)/2 - f'(N)/12
  //                                     + f'''(N)/720 - ...
  BigFloat Nf = BigFloat::of(N, wp);
  BigFloat ln = Nf.log();
  BigFloat integral = Nf.pow(1 - t) * (ln.div(t - 1) + BigFloat::of(1, wp).div((t - 1) * (t - 1)));
  BigFloat f = ln * Nf.pow(-t);
  BigFloat fp = Nf.pow(-t - 1) * (BigFloat::of(1, wp) - ln.mul(t));
  BigFloat fppp = Nf.pow(-t - 3) *
                  (BigFloat::of(3 * t * t + 6 * t + 2, wp) - ln.mul(t * (t + 1) * (t + 2)));
  return integral - f.div(2) - fp.div(12) + fppp.div(720);
}

}  // namespace esum
