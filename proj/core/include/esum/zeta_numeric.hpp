#pragma once

#include "esum/bigfloat.hpp"

namespace esum {

// zeta(s) for integer s >= 2 by Euler-Maclaurin summation, accurate to
// within 2^-(prec+8) at the working precision. Values are cached per
// (s, prec).
BigFloat zeta_numeric(long s, mpfr_prec_t prec);

// sum_{n>N} n^-t  (the zeta tail), t >= 2, by the Euler-Maclaurin expansion
// at N; terms are added until below 2^-(prec+8).
BigFloat zeta_tail(long t, long N, mpfr_prec_t prec);

// sum_{n>N} ln(n) n^-t, t >= 2, first Euler-Maclaurin terms (integral, half
// term, two derivative corrections). Intended for tail corrections where
// O(ln N / N^(t+5)) residual is negligible.
BigFloat power_log_tail(long t, long N, mpfr_prec_t prec);

}  // namespace esum
