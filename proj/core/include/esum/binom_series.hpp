#pragma once

#include <optional>
#include <string>
#include <utility>

#include "esum/zexpr.hpp"

namespace esum {

// Parameters of the series sum_n H_n^(p,q) / ((n+m) C(n+m+l, l)).
struct BinomSeriesSpec {
  long p = 1;
  long q = 0;
  long m = 0;
  long l = 0;

  friend bool operator==(const BinomSeriesSpec&, const BinomSeriesSpec&) = default;
};

std::optional<std::string> validation_error(const BinomSeriesSpec& spec);
void validate(const BinomSeriesSpec& spec);

// Closed form of the series; fully explicit (rationals plus zeta values).
// m >= 1 and m = 0 use the two evaluation formulas respectively; the
// harmonic numbers fold into rational coefficients immediately.
ZExpr binom_series(const BinomSeriesSpec& spec);
inline ZExpr binom_series(long p, long q, long m, long l) {
  return binom_series(BinomSeriesSpec{p, q, m, l});
}

// Exact rational partial sum of the defining series, n = 1..N. The small-N
// oracle for binom_series.
Rational binom_series_direct(const BinomSeriesSpec& spec, long N);

// sum_n n H_n^(p) / ((n+m) C(n+m+l, l)) for m >= 1, and
// sum_n H_n^(p) / C(n+l, l) for m = 0, via the mu kernel. Requires p >= 2
// (mu(p-1,.) needs p-1 >= 1) and l >= 2.
ZExpr weighted_series_q2(long p, long m, long l);

// The p = 1, l = 2 companion with the plain product denominator:
// sum_n n H_n / ((n+m)(n+m+1)(n+m+2)) = (H_{m+1} + 1) / (2(m+1)).
Rational weighted_series_p1(long m);

// lhs = sum_{k=0}^{m} (-1)^k C(m,k) H_{n+k}/(n+k),
// rhs = (H_{n+m} - H_m) / (n C(n+m, m)); the two sides of the alternating
// binomial harmonic identity, both exact.
std::pair<Rational, Rational> chu_identity(long m, long n);

// lhs = sum_{j=1}^{n} (-1)^(j+1) C(n,j) H_j/j, rhs = H_n^(2).
std::pair<Rational, Rational> b2018_identity(long n);

}  // namespace esum
