#pragma once

#include <optional>
#include <string>

#include "esum/zexpr.hpp"

namespace esum {

// Parameters of the Euler sum sum_n H_n^(p,order)/n^r. order is the
// hyperharmonic level (order = 1 is the plain generalized-harmonic case;
// order = q+1 in the q-indexed closed formulas).
struct EulerSumSpec {
  long p = 1;
  long order = 1;
  long r = 2;

  friend bool operator==(const EulerSumSpec&, const EulerSumSpec&) = default;
};

// Convergence precondition; nullopt when the spec is admissible.
std::optional<std::string> validation_error(const EulerSumSpec& spec);
void validate(const EulerSumSpec& spec);  // throws PreconditionError

// mu(r,j) = sum_n 1/(n^r (n+j))
//         = sum_{k=1}^{r-1} (-1)^(k-1) j^-k zeta(r+1-k) + (-1)^(r-1) H_j / j^r
ZExpr mu(long r, long j);

// Euler's identity: zeta_H(r) = ((r+2) zeta(r+1) - sum_{j=1}^{r-2}
// zeta(r-j) zeta(j+1)) / 2, for r >= 2.
ZExpr euler_basic(long r);

// Odd-weight evaluation of zeta_{H^(p)}(r) for N = p+r odd >= 3,
// 1 <= p <= N-2, with zeta(0) = -1/2 substituted throughout.
ZExpr euler_oddweight(long p, long r);

// zeta(p+r) + zeta(p) zeta(r), the value of zH(p,r) + zH(r,p), for p,r >= 2.
ZExpr reflection(long p, long r);

// Full dispatch for the linear sum zeta_{H^(p)}(r). Priority: p <= 0 via
// Faulhaber expansion, p = 1 Euler, odd weight, diagonal, the built-in
// even-weight table, else an euler_sum atom normalized to p < r via
// reflection. Throws on divergent requests.
ZExpr reduce_linear(long p, long r);

// Hyperharmonic Euler sum zeta_{h^(q)}(r) via the Stirling/mu expansion,
// r > q; fully explicit (no atoms). Equals hyper_reduce({1, q, r}).
ZExpr hyperharmonic_euler(long q, long r);

// zeta_{H^(p,order)}(r): order = 1 delegates to reduce_linear; order = q+1
// >= 2 uses (1/q!) sum_{m=0}^{q} sum_{k=0}^{m} (-1)^k [q+1,m+1] C(m,k)
// zeta_{H^(p-k)}(r+k-m).
ZExpr hyper_reduce(const EulerSumSpec& spec);
inline ZExpr hyper_reduce(long p, long order, long r) {
  return hyper_reduce(EulerSumSpec{p, order, r});
}

// The reflection corollary: value of zH^(p,order)(r) + zH^(r,order)(p) for
// p, r > order, p+r even, order >= 2. Output contains no euler_sum atoms.
ZExpr reflection_hyper(long p, long order, long r);

}  // namespace esum
