#pragma once

#include "esum/bigfloat.hpp"
#include "esum/binom_series.hpp"
#include "esum/euler_reduce.hpp"
#include "esum/zexpr.hpp"

namespace esum {

// Result of a truncated series evaluation. value = raw_partial plus a
// first-order tail correction; tail_bound is an envelope on the raw
// truncation error (Euler-Maclaurin estimates with a documented safety
// factor, not certified enclosures).
struct DirectSum {
  BigFloat value;
  BigFloat raw_partial;
  BigFloat tail_bound;
  long terms = 0;
};

// Direct summation of sum_{n<=N} H_n^(p,order)/n^r with streaming
// prefix-sum accumulators of the defining recurrence, plus the tail
// correction obtained by expanding H_n^(p,order) into n^(m-k) H_n^(p-k)
// and correcting each linear tail sum_{n>N} H_n^(s)/n^t.
DirectSum euler_sum_direct(const EulerSumSpec& spec, long N, mpfr_prec_t prec);

// Same scheme for sum_{n<=N} H_n^(p,q)/((n+m) C(n+m+l,l)); the correction
// uses a two-point power(-log) fit of the computed terms.
DirectSum binom_direct_numeric(const BinomSeriesSpec& spec, long N, mpfr_prec_t prec);

struct EvalResult {
  BigFloat value;
  BigFloat error_bound;  // from euler_sum atom evaluations; zero otherwise
};

// Numeric value of a canonical expression. pi and zeta(s) evaluate to full
// working precision; zH(p,r) atoms by direct summation with tail
// correction, contributing their documented error bound.
EvalResult eval_zexpr_bounded(const ZExpr& e, mpfr_prec_t prec);
BigFloat eval_zexpr(const ZExpr& e, mpfr_prec_t prec);

// Both sides of the generating-function identity
// sum_{n>=0} H_n^(p,q) t^n = Li_p(t)/(1-t)^q at rational 0 < t < 1,
// truncated at N with geometric tail bounds for each side.
struct GenfuncCheck {
  BigFloat series_sum;
  BigFloat closed_form;
  BigFloat series_tail;
  BigFloat closed_tail;
};

GenfuncCheck genfunc_check(long p, long q, const Rational& t, long N, mpfr_prec_t prec);

}  // namespace esum
