#pragma once

#include <optional>
#include <string>

#include "esum/series_numeric.hpp"

namespace esum {

// Outcome of checking one closed form against direct summation of its
// defining series. passed <=> abs_diff <= tolerance + tail_bound, with the
// atom-evaluation error folded into tail_bound.
struct VerifyReport {
  std::string spec_desc;
  std::optional<ZExpr> symbolic;
  BigFloat symbolic_numeric;
  BigFloat direct_sum;
  BigFloat tail_bound;
  BigFloat abs_diff;
  bool passed = false;
  long terms_used = 0;
  std::optional<std::string> error;

  std::string to_json() const;
};

VerifyReport verify_euler(const EulerSumSpec& spec, long N, mpfr_prec_t prec,
                          const BigFloat& tolerance);
VerifyReport verify_binom(const BinomSeriesSpec& spec, long N, mpfr_prec_t prec,
                          const BigFloat& tolerance);

}  // namespace esum
