#include "esum/binom_series.hpp"

#include "esum/combinatorics.hpp"
#include "esum/error.hpp"
#include "esum/euler_reduce.hpp"

namespace esum {

std::optional<std::string> validation_error(const BinomSeriesSpec& spec) {
  if (spec.p < 1) return "requires p >= 1";
  if (spec.q < 0 || spec.l < 0 || spec.m < 0) return "requires q, m, l >= 0";
  if (spec.l < spec.q) return "l >= q required";
  // Term decay re-derivation: H_n^(p,q) grows like n^(q-1) (up to a log for
  // p = 1), the denominator like n^(l+1); decay exponent l - q + 2 must be
  // at least 2. For p >= 1 this is exactly l >= q, so the guard above is the
  // convergence guard too.
  if (spec.l - spec.q + 2 < 2) return "series term decay exponent <= 1 (divergent)";
  return std::nullopt;
}

void validate(const BinomSeriesSpec& spec) {
  if (auto err = validation_error(spec)) throw PreconditionError(*err);
}

ZExpr binom_series(const BinomSeriesSpec& spec) {
  validate(spec);
  const long p = spec.p, q = spec.q, m = spec.m, l = spec.l;
  if (m >= 1) {
    ZExpr out;
    for (long j = 0; j <= l - q; ++j) {
      Rational b(binomial(l - q, j));
      Rational h = b * harmonic(m + j, 1) * pow_rational(make_rational(1, m + j), p);
      if ((j + p - 1) % 2 != 0) h = -h;
      out += ZExpr::from_rational(h);
      for (long k = 1; k <= p - 1; ++k) {
        Rational c = b * pow_rational(make_rational(1, m + j), k);
        if ((j + k - 1) % 2 != 0) c = -c;
        out += zeta_value(static_cast<int>(p + 1 - k)).scaled(c);
      }
    }
    return out;
  }
  ZExpr out = zeta_value(static_cast<int>(p + 1));
  for (long j = 1; j <= l - q; ++j) {
    Rational b(binomial(l - q, j));
    Rational h = b * harmonic(j, 1) * pow_rational(make_rational(1, j), p);
    if ((j + p) % 2 != 0) h = -h;
    out -= ZExpr::from_rational(h);
    for (long k = 1; k <= p - 1; ++k) {
      Rational c = b * pow_rational(make_rational(1, j), k);
      if ((j + k) % 2 != 0) c = -c;
      out -= zeta_value(static_cast<int>(p + 1 - k)).scaled(c);
    }
  }
  return out;
}

Rational binom_series_direct(const BinomSeriesSpec& spec, long N) {
  validate(spec);
  Rational sum(0);
  for (long n = 1; n <= N; ++n) {
    Rational den = Rational(n + spec.m) * Rational(binomial(n + spec.m + spec.l, spec.l));
    sum += hyperharmonic_def(n, spec.p, spec.q) / den;
  }
  return sum;
}

ZExpr weighted_series_q2(long p, long m, long l) {
  if (l <= 1) throw PreconditionError("requires l >= 2");
  if (p <= 1) throw PreconditionError("requires p >= 2");
  if (m < 0) throw PreconditionError("requires m >= 0");
  if (m >= 1) {
    ZExpr out = mu(p - 1, m);
    for (long j = 1; j <= l - 1; ++j) {
      ZExpr term = mu(p - 1, m + j).scaled(Rational(binomial(l - 1, j))) -
                   mu(p, m + j).scaled(Rational(binomial(l - 2, j - 1)));
      out += (j % 2 == 0) ? term : -term;
    }
    return out;
  }
  ZExpr out = zeta_value(static_cast<int>(p));
  for (long j = 1; j <= l - 1; ++j) {
    ZExpr term = mu(p - 1, j).scaled(Rational(binomial(l - 1, j))) -
                 mu(p, j).scaled(Rational(binomial(l - 2, j - 1)));
    out += (j % 2 == 0) ? term : -term;
  }
  return out;
}

Rational weighted_series_p1(long m) {
  if (m < 0) throw PreconditionError("requires m >= 0");
  return (harmonic(m + 1, 1) + 1) / Rational(2 * (m + 1));
}

std::pair<Rational, Rational> chu_identity(long m, long n) {
  if (m < 0 || n < 1) throw PreconditionError("chu_identity requires m >= 0 and n >= 1");
  Rational lhs(0);
  for (long k = 0; k <= m; ++k) {
    Rational t = Rational(binomial(m, k)) * harmonic(n + k, 1) / Rational(n + k);
    lhs += (k % 2 == 0) ? t : -t;
  }
  Rational rhs = (harmonic(n + m, 1) - harmonic(m, 1)) / (Rational(n) * Rational(binomial(n + m, m)));
  return {lhs, rhs};
}

std::pair<Rational, Rational> b2018_identity(long n) {
  if (n < 1) throw PreconditionError("b2018_identity requires n >= 1");
  Rational lhs(0);
  for (long j = 1; j <= n; ++j) {
    Rational t = Rational(binomial(n, j)) * harmonic(j, 1) / Rational(j);
    lhs += (j % 2 == 1) ? t : -t;
  }
  return {lhs, harmonic(n, 2)};
}

}  // namespace esum
