#include "esum/euler_reduce.hpp"

#include <utility>

#include "esum/combinatorics.hpp"
#include "esum/error.hpp"

namespace esum {

std::optional<std::string> validation_error(const EulerSumSpec& spec) {
  if (spec.order < 1) return "requires order >= 1";
  if (spec.order == 1) {
    if (spec.r < 2) return "requires r >= 2";
    if (spec.p <= 0 && spec.p + spec.r < 3) return "requires p + r >= 3 when p <= 0";
    return std::nullopt;
  }
  if (spec.p < 1) return "requires p >= 1 for order >= 2";
  if (spec.r <= spec.order) return "requires r > q+1";
  return std::nullopt;
}

void validate(const EulerSumSpec& spec) {
  if (auto err = validation_error(spec)) throw PreconditionError(*err);
}

ZExpr mu(long r, long j) {
  if (r < 1 || j < 1) throw PreconditionError("mu requires r >= 1 and j >= 1");
  ZExpr out;
  for (long k = 1; k <= r - 1; ++k) {
    Rational c = pow_rational(make_rational(1, j), k);
    if (k % 2 == 0) c = -c;
    out += zeta_value(static_cast<int>(r + 1 - k)).scaled(c);
  }
  Rational h = harmonic(j, 1) * pow_rational(make_rational(1, j), r);
  if (r % 2 == 0) h = -h;
  out += ZExpr::from_rational(h);
  return out;
}

ZExpr euler_basic(long r) {
  if (r < 2) throw PreconditionError("euler_basic requires r >= 2");
  ZExpr out = zeta_value(static_cast<int>(r + 1)).scaled(Rational(r + 2));
  for (long j = 1; j <= r - 2; ++j) {
    out -= zeta_value(static_cast<int>(r - j)) * zeta_value(static_cast<int>(j + 1));
  }
  return out.scaled(make_rational(1, 2));
}

ZExpr euler_oddweight(long p, long r) {
  long N = p + r;
  if (N % 2 == 0) throw PreconditionError("euler_oddweight requires odd weight p + r");
  if (N < 3 || p < 1 || p > N - 2) {
    throw PreconditionError("euler_oddweight requires N >= 3 and 1 <= p <= N-2");
  }
  ZExpr sum;
  for (long j = 0; j <= (N - p - 1) / 2; ++j) {
    sum += (zeta_value(static_cast<int>(N - 2 * j)) * zeta_value(static_cast<int>(2 * j)))
               .scaled(Rational(binomial(N - 2 * j - 1, p - 1)));
  }
  for (long j = 0; j <= p / 2; ++j) {
    sum += (zeta_value(static_cast<int>(N - 2 * j)) * zeta_value(static_cast<int>(2 * j)))
               .scaled(Rational(binomial(N - 2 * j - 1, N - p - 1)));
  }
  if (p % 2 == 1) sum = -sum;
  return sum - zeta_value(0) * zeta_value(static_cast<int>(N));
}

ZExpr reflection(long p, long r) {
  if (p < 2 || r < 2) throw PreconditionError("reflection requires p, r >= 2");
  return zeta_value(static_cast<int>(p + r)) +
         zeta_value(static_cast<int>(p)) * zeta_value(static_cast<int>(r));
}

namespace {

// The only nonlinear even-weight value the source table provides beyond the
// rule-covered cases; its (4,2) mirror is produced by reflection.
ZExpr table_entry_2_4() {
  ZExpr z3 = zeta_value(3);
  return z3 * z3 - ZExpr::from_atom(Atom::pi(), 6).scaled(make_rational(1, 2835));
}

}  // namespace

ZExpr reduce_linear(long p, long r) {
  if (p <= 0) {
    if (p + r < 3) throw PreconditionError("requires p + r >= 3 when p <= 0");
    FaulhaberPoly poly = faulhaber(-p);
    ZExpr out;
    for (long i = 1; i <= poly.degree; ++i) {
      out += zeta_value(static_cast<int>(r - i)).scaled(poly.coeff[static_cast<size_t>(i - 1)]);
    }
    return out;
  }
  if (r < 2) throw PreconditionError("requires r >= 2");
  if (p == 1) return euler_basic(r);
  if ((p + r) % 2 == 1) return euler_oddweight(p, r);
  if (p == r) return reflection(p, p).scaled(make_rational(1, 2));
  if (p == 2 && r == 4) return table_entry_2_4();
  if (p == 4 && r == 2) return reflection(2, 4) - table_entry_2_4();
  if (p < r) return ZExpr::from_atom(Atom::euler_sum(static_cast<int>(p), static_cast<int>(r)));
  return reflection(p, r) - reduce_linear(r, p);
}

ZExpr hyperharmonic_euler(long q, long r) {
  if (q < 1) throw PreconditionError("hyperharmonic_euler requires q >= 1");
  if (r <= q) throw PreconditionError("requires r > q");
  Rational hq1 = harmonic(q - 1, 1);
  ZExpr out;
  for (long k = 1; k <= q; ++k) {
    ZExpr inner = euler_basic(r - k + 1);
    inner -= zeta_value(static_cast<int>(r - k + 1)).scaled(hq1);
    for (long j = 1; j <= q - 1; ++j) inner += mu(r - k + 1, j);
    out += inner.scaled(Rational(stirling1(q, k)));
  }
  return out.scaled(make_rational(Integer(1), factorial(q - 1)));
}

ZExpr hyper_reduce(const EulerSumSpec& spec) {
  validate(spec);
  if (spec.order == 1) return reduce_linear(spec.p, spec.r);
  long q = spec.order - 1;
  Rational inv_qfact = make_rational(Integer(1), factorial(q));
  ZExpr out;
  for (long m = 0; m <= q; ++m) {
    Integer sm = rstirling1(q + 1, m + 1, 0);
    for (long k = 0; k <= m; ++k) {
      Rational c = Rational(sm) * Rational(binomial(m, k)) * inv_qfact;
      if (k % 2 == 1) c = -c;
      try {
        out += reduce_linear(spec.p - k, spec.r + k - m).scaled(c);
      } catch (const PreconditionError& e) {
        throw PreconditionError("inner term zeta_H^(" + std::to_string(spec.p - k) + ")(" +
                                std::to_string(spec.r + k - m) + ") diverges: " + e.what());
      }
    }
  }
  return out;
}

ZExpr reflection_hyper(long p, long order, long r) {
  if (order < 2) throw PreconditionError("reflection_hyper requires order >= 2");
  long q = order - 1;
  if (p <= q + 1 || r <= q + 1) throw PreconditionError("requires p > q+1 and r > q+1");
  if ((p + r) % 2 != 0) throw PreconditionError("requires even weight p + r");
  Rational inv_qfact = make_rational(Integer(1), factorial(q));
  ZExpr out = zeta_value(static_cast<int>(p + r));
  for (long m = 1; m <= q; m += 2) {
    Integer sm = rstirling1(q + 1, m + 1, 0);
    for (long k = 0; k <= m; ++k) {
      Rational c = Rational(2) * Rational(sm) * Rational(binomial(m, k)) * inv_qfact;
      if (k % 2 == 1) c = -c;
      out += reduce_linear(p - k, r + k - m).scaled(c);
    }
  }
  for (long m = 0; m <= q; ++m) {
    Integer sm = rstirling1(q + 1, m + 1, 0);
    for (long k = 0; k <= m; ++k) {
      Rational c = Rational(sm) * Rational(binomial(m, k)) * inv_qfact;
      if ((m + k) % 2 == 1) c = -c;
      out += (zeta_value(static_cast<int>(p - k)) * zeta_value(static_cast<int>(r + k - m)))
                 .scaled(c);
    }
  }
  return out;
}

}  // namespace esum
