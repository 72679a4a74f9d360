#include "esum/series_numeric.hpp"

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "esum/combinatorics.hpp"
#include "esum/error.hpp"
#include "esum/zeta_numeric.hpp"

namespace esum {

namespace {

constexpr long kAtomTerms = 20000;

// Envelope estimates are Euler-Maclaurin values promoted to bounds; the
// safety factor absorbs their own (tiny) truncation residue.
BigFloat fudge(const BigFloat& v, mpfr_prec_t wp) {
  return v * BigFloat::of(make_rational(5, 4), wp);
}

// tau(s,t,N) = sum_{n>N} H_n^(s)/n^t, first-order corrected:
//   s >= 2 : zeta(s) ztail(t) - 1/((s-1)(s+t-2) N^(s+t-2))
//   s == 1 : H_n ~ ln n + gamma + 1/(2n) - 1/(12 n^2)
//   s <= 0 : Faulhaber expansion, exact in zeta tails
BigFloat tau_tail(long s, long t, long N, mpfr_prec_t wp) {
  if (s >= 2) {
    BigFloat first_order =
        BigFloat::of(N, wp).pow(-(s + t - 2)).div((s - 1) * (s + t - 2));
    return zeta_numeric(s, wp) * zeta_tail(t, N, wp) - first_order;
  }
  if (s == 1) {
    return power_log_tail(t, N, wp) + BigFloat::euler_gamma(wp) * zeta_tail(t, N, wp) +
           zeta_tail(t + 1, N, wp).div(2) - zeta_tail(t + 2, N, wp).div(12);
  }
  FaulhaberPoly poly = faulhaber(-s);
  BigFloat out(wp);
  for (long i = 1; i <= poly.degree; ++i) {
    out += BigFloat::of(poly.coeff[static_cast<size_t>(i - 1)], wp) * zeta_tail(t - i, N, wp);
  }
  return out;
}

// Envelope on H_n^(p,q): zeta(max(p,2)) C(n+q-1,q-1) for p >= 2, the
// (1 + ln) variant for p = 1, and the Faulhaber-degree power for p <= 0.
BigFloat euler_tail_envelope(long p, long q, long r, long N, mpfr_prec_t wp) {
  if (p <= 0) {
    FaulhaberPoly poly = faulhaber(-p);
    BigFloat out(wp);
    for (long i = 1; i <= poly.degree; ++i) {
      BigFloat c = BigFloat::of(poly.coeff[static_cast<size_t>(i - 1)], wp).abs();
      out += c * zeta_tail(r - i, N, wp);
    }
    return fudge(out, wp);
  }
  // C(n+q-1,q-1) <= (1+q/(N+1))^(q-1) n^(q-1) / (q-1)!  for n > N
  BigFloat shape = BigFloat::of(make_rational(N + 1 + q, N + 1), wp).pow(q - 1) /
                   BigFloat::of(Rational(factorial(q - 1)), wp);
  if (p >= 2) {
    return fudge(zeta_numeric(p, wp) * shape * zeta_tail(r - q + 1, N, wp), wp);
  }
  // p == 1: 1 + ln(n+q-1) <= (1 + q/N) + ln n
  BigFloat lin = zeta_tail(r - q + 1, N, wp) *
                 (BigFloat::of(1, wp) + BigFloat::of(make_rational(q, N), wp));
  return fudge(shape * (lin + power_log_tail(r - q + 1, N, wp)), wp);
}

}  // namespace

DirectSum euler_sum_direct(const EulerSumSpec& spec, long N, mpfr_prec_t prec) {
  validate(spec);
  if (N < 10) throw PreconditionError("euler_sum_direct requires N >= 10");
  const mpfr_prec_t wp = prec + 64;
  const long order = spec.order;

  std::vector<BigFloat> acc(static_cast<size_t>(order) + 1, BigFloat(wp));
  BigFloat partial(wp);
  for (long n = 1; n <= N; ++n) {
    BigFloat nf = BigFloat::of(n, wp);
    acc[0] = nf.pow(-spec.p);
    for (long j = 1; j <= order; ++j) acc[static_cast<size_t>(j)] += acc[static_cast<size_t>(j - 1)];
    partial += acc[static_cast<size_t>(order)] * nf.pow(-spec.r);
  }

  BigFloat correction(wp);
  if (order == 1) {
    correction = tau_tail(spec.p, spec.r, N, wp);
  } else {
    long q = order - 1;
    Rational inv_qfact = make_rational(Integer(1), factorial(q));
    for (long m = 0; m <= q; ++m) {
      Integer sm = rstirling1(q + 1, m + 1, 0);
      for (long k = 0; k <= m; ++k) {
        Rational c = Rational(sm) * Rational(binomial(m, k)) * inv_qfact;
        if (k % 2 == 1) c = -c;
        correction += BigFloat::of(c, wp) * tau_tail(spec.p - k, spec.r + k - m, N, wp);
      }
    }
  }

  DirectSum out{partial + correction, partial,
                euler_tail_envelope(spec.p, order, spec.r, N, wp), N};
  return out;
}

namespace {

std::mutex atom_mutex;
std::map<std::tuple<int, int, mpfr_prec_t>, EvalResult>& atom_cache() {
  static std::map<std::tuple<int, int, mpfr_prec_t>, EvalResult> cache;
  return cache;
}

// zH(p,r) by direct summation with tail correction. Residual after the
// first-order correction is below the zeta(p+r) tail at the cutoff, which
// is reported as the error bound.
EvalResult euler_atom_numeric(int p, int r, mpfr_prec_t wp) {
  {
    std::lock_guard<std::mutex> lock(atom_mutex);
    auto it = atom_cache().find({p, r, wp});
    if (it != atom_cache().end()) return it->second;
  }
  BigFloat h(wp), partial(wp);
  for (long n = 1; n <= kAtomTerms; ++n) {
    BigFloat nf = BigFloat::of(n, wp);
    h += nf.pow(-p);
    partial += h * nf.pow(-r);
  }
  EvalResult res{partial + tau_tail(p, r, kAtomTerms, wp),
                 zeta_tail(p + r, kAtomTerms, wp)};
  std::lock_guard<std::mutex> lock(atom_mutex);
  return atom_cache().emplace(std::make_tuple(p, r, wp), res).first->second;
}

}  // namespace

EvalResult eval_zexpr_bounded(const ZExpr& e, mpfr_prec_t prec) {
  const mpfr_prec_t wp = prec + 32;
  BigFloat total(wp), total_err(wp);
  for (const auto& [mono, coeff] : e.terms()) {
    BigFloat value = BigFloat::of(1, wp);
    BigFloat rel_err(wp);
    for (const auto& [atom, exp] : mono.factors()) {
      BigFloat v(wp);
      switch (atom.kind()) {
        case Atom::Kind::Pi:
          v = BigFloat::pi(wp);
          break;
        case Atom::Kind::ZetaOdd:
          v = zeta_numeric(atom.zeta_index(), wp);
          break;
        case Atom::Kind::EulerSum: {
          EvalResult a = euler_atom_numeric(atom.euler_p(), atom.euler_r(), wp);
          v = a.value;
          rel_err += (a.error_bound / a.value.abs()).mul(exp);
          break;
        }
      }
      value = value * v.pow(exp);
    }
    BigFloat c = BigFloat::of(coeff, wp);
    total += c * value;
    total_err += (c * value).abs() * rel_err;
  }
  return {total, total_err};
}

BigFloat eval_zexpr(const ZExpr& e, mpfr_prec_t prec) {
  return eval_zexpr_bounded(e, prec).value;
}

DirectSum binom_direct_numeric(const BinomSeriesSpec& spec, long N, mpfr_prec_t prec) {
  validate(spec);
  if (N < 20) throw PreconditionError("binom_direct_numeric requires N >= 20");
  const mpfr_prec_t wp = prec + 64;
  const long p = spec.p, q = spec.q, m = spec.m, l = spec.l;

  std::vector<BigFloat> acc(static_cast<size_t>(q) + 1, BigFloat(wp));
  BigFloat partial(wp);
  Integer binom_den = binomial(1 + m + l, l);  // C(n+m+l, l) at n = 1, updated in place
  const long pts[4] = {N / 4, N / 2, (3 * N) / 4, N};
  BigFloat term_at[4] = {BigFloat(wp), BigFloat(wp), BigFloat(wp), BigFloat(wp)};
  for (long n = 1; n <= N; ++n) {
    BigFloat nf = BigFloat::of(n, wp);
    acc[0] = nf.pow(-p);
    for (long j = 1; j <= q; ++j) acc[static_cast<size_t>(j)] += acc[static_cast<size_t>(j - 1)];
    Integer den = Integer(n + m) * binom_den;
    BigFloat term = acc[static_cast<size_t>(q)] / BigFloat::of(den, wp);
    partial += term;
    for (int i = 0; i < 4; ++i) {
      if (n == pts[i]) term_at[i] = term;
    }
    // C(n+1+m+l, l) = C(n+m+l, l) (n+m+l+1) / (n+m+1)
    binom_den *= Integer(n + m + l + 1);
    mpz_divexact_ui(binom_den.get_mpz_t(), binom_den.get_mpz_t(),
                    static_cast<unsigned long>(n + m + 1));
  }

  // Fit term_n n^s ~ a + b ln n + c/n + d ln(n)/n through the four computed
  // points; the log columns vanish from the fit when the sequence carries no
  // harmonic factor. Extrapolation error beyond N is at the ln(n)/n^(s+2)
  // scale.
  const long s = (q == 0) ? p + l + 1 : l - q + 2;
  BigFloat mat[4][5];
  for (int i = 0; i < 4; ++i) {
    BigFloat nf = BigFloat::of(pts[i], wp);
    BigFloat ln = nf.log();
    mat[i][0] = BigFloat::of(1, wp);
    mat[i][1] = ln;
    mat[i][2] = BigFloat::of(1, wp) / nf;
    mat[i][3] = ln / nf;
    mat[i][4] = term_at[i] * nf.pow(s);
  }
  for (int col = 0; col < 4; ++col) {  // gaussian elimination, partial pivot
    int pivot = col;
    for (int row = col + 1; row < 4; ++row) {
      if (mat[pivot][col].abs() < mat[row][col].abs()) pivot = row;
    }
    for (int k = 0; k <= 4; ++k) std::swap(mat[col][k], mat[pivot][k]);
    for (int row = col + 1; row < 4; ++row) {
      BigFloat f = mat[row][col] / mat[col][col];
      for (int k = col; k <= 4; ++k) mat[row][k] -= f * mat[col][k];
    }
  }
  BigFloat fit[4] = {BigFloat(wp), BigFloat(wp), BigFloat(wp), BigFloat(wp)};
  for (int row = 3; row >= 0; --row) {
    BigFloat rhs = mat[row][4];
    for (int k = row + 1; k < 4; ++k) rhs -= mat[row][k] * fit[k];
    fit[row] = rhs / mat[row][row];
  }
  BigFloat correction = fit[0] * zeta_tail(s, N, wp) + fit[1] * power_log_tail(s, N, wp) +
                        fit[2] * zeta_tail(s + 1, N, wp) +
                        fit[3] * power_log_tail(s + 1, N, wp);
  const bool log_fit = (p == 1 && q >= 1);

  // Envelope: H_n^(p,q) <= zeta(p) C(n+q-1,q-1) (p >= 2),
  // <= C(n+q-1,q-1)(1+ln(n+q-1)) (p = 1), = n^-p (q = 0); the integral
  // comparison multiplier covers the decreasing remainder.
  BigFloat env(wp);
  {
    long n1 = N + 1;
    Integer den1 = Integer(n1 + m) * binomial(n1 + m + l, l);
    BigFloat denom = BigFloat::of(den1, wp);
    BigFloat hb(wp);
    if (q == 0) {
      hb = BigFloat::of(n1, wp).pow(-p);
    } else {
      hb = BigFloat::of(Rational(binomial(n1 + q - 1, q - 1)), wp);
      if (p >= 2) {
        hb = hb * zeta_numeric(p, wp);
      } else {
        hb = hb * (BigFloat::of(1, wp) + BigFloat::ln_of(n1 + q - 1, wp));
      }
    }
    BigFloat mult = BigFloat::of(1, wp) + BigFloat::of(n1, wp).div(s - 1);
    if (log_fit) {
      mult += BigFloat::of(n1, wp) / (BigFloat::of((s - 1) * (s - 1), wp) * BigFloat::ln_of(n1, wp));
    }
    env = fudge(hb / denom * mult, wp);
  }

  return DirectSum{partial + correction, partial, env, N};
}

GenfuncCheck genfunc_check(long p, long q, const Rational& t, long N, mpfr_prec_t prec) {
  if (!(t > 0 && t < 1)) throw PreconditionError("genfunc_check requires 0 < t < 1");
  if (q < 0) throw PreconditionError("genfunc_check requires q >= 0");
  if (N < 10) throw PreconditionError("genfunc_check requires N >= 10");
  const mpfr_prec_t wp = prec + 32;
  BigFloat tf = BigFloat::of(t, wp);

  std::vector<BigFloat> acc(static_cast<size_t>(q) + 1, BigFloat(wp));
  BigFloat series(wp), li(wp);
  BigFloat tpow = BigFloat::of(1, wp);
  for (long n = 1; n <= N; ++n) {
    tpow = tpow * tf;
    BigFloat np = BigFloat::of(n, wp).pow(-p);
    acc[0] = np;
    for (long j = 1; j <= q; ++j) acc[static_cast<size_t>(j)] += acc[static_cast<size_t>(j - 1)];
    series += acc[static_cast<size_t>(q)] * tpow;
    li += np * tpow;
  }
  BigFloat one_minus_t = BigFloat::of(1, wp) - tf;
  BigFloat closed = li * one_minus_t.pow(-q);

  // Ratio bounds: H_n^(p,q) <= A (n+q)^d with (A,d) per the envelope table;
  // the tail of A (n+q)^d t^n is geometric once t (1+1/(N+q+1))^d < 1.
  long d;
  BigFloat A(wp);
  if (p >= 2) {
    d = q - 1;
    A = zeta_numeric(p, wp);
  } else if (p == 1) {
    d = q;
    A = BigFloat::of(2, wp);
  } else {
    d = q - p;
    A = BigFloat::of(1, wp);
  }
  BigFloat rho = tf * BigFloat::of(make_rational(N + q + 2, N + q + 1), wp).pow(std::max(d, 0L));
  if (!(rho < BigFloat::of(1, wp))) throw PreconditionError("genfunc_check: N too small for tail bound");
  BigFloat series_tail = A * BigFloat::of(N + 1 + q, wp).pow(d) * tf.pow(N + 1) /
                         (BigFloat::of(1, wp) - rho);

  BigFloat li_tail(wp);
  if (p >= 0) {
    li_tail = tf.pow(N + 1) * BigFloat::of(N + 1, wp).pow(-p) / one_minus_t;
  } else {
    BigFloat rho2 = tf * BigFloat::of(make_rational(N + 2, N + 1), wp).pow(-p);
    if (!(rho2 < BigFloat::of(1, wp))) throw PreconditionError("genfunc_check: N too small for tail bound");
    li_tail = BigFloat::of(N + 1, wp).pow(-p) * tf.pow(N + 1) / (BigFloat::of(1, wp) - rho2);
  }
  BigFloat closed_tail = li_tail * one_minus_t.pow(-q);

  return GenfuncCheck{series, closed, series_tail, closed_tail};
}

}  // namespace esum
