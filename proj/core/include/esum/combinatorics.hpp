#pragma once

#include <vector>

#include "esum/rational.hpp"

namespace esum {

Integer factorial(long n);

// Binomial coefficient; 0 for k < 0 or k > n.
Integer binomial(long n, long k);

// Generalized harmonic number H_n^(p) = sum_{k=1}^{n} k^{-p}, exact, any
// integer p (p <= 0 is a sum of powers of integers). H_0^(p) = 0.
Rational harmonic(long n, long p);

// Generalized hyperharmonic number H_n^(p,q) by the literal nested-sum
// recurrence H_n^(p,q) = sum_{k<=n} H_k^(p,q-1), H_n^(p,0) = n^-p. This is
// the brute-force oracle for the closed forms. Rows are memoized per (p,q)
// behind a lock; observable behavior is pure.
// H_0^(p,q) = 0 for q >= 1; (n=0, q=0, p>0) is rejected as undefined.
Rational hyperharmonic_def(long n, long p, long q);

// Closed form (1/q!) sum_{k=0}^{q} (-1)^k [q,k]_{n+1} H_n^(p-k) with
// q = order-1. order = 1 collapses to harmonic(n, p).
Rational hyperharmonic_closed(long n, long p, long order);

// r-Stirling number of the first kind [q,k]_r: coefficient of x^k in
// (x+r)(x+r+1)...(x+r+q-1), by exact polynomial expansion. 0 outside 0<=k<=q.
Integer rstirling1(long q, long k, long r);

// Unsigned Stirling number of the first kind, [q,k] = [q,k]_0.
Integer stirling1(long q, long k);

// k-th elementary symmetric polynomial of the given values; e_0 = 1,
// e_k = 0 for k > size.
Rational elem_symmetric(const std::vector<Rational>& values, long k);

// Bernoulli number, B+ convention (B_1 = +1/2).
Rational bernoulli(long n);

// P(n) = sum_{k=1}^{n} k^a as a polynomial in n with no constant term;
// coeff[i] multiplies n^(i+1), degree = a+1.
struct FaulhaberPoly {
  long degree = 0;
  std::vector<Rational> coeff;  // coeff[i] is the coefficient of n^(i+1)

  Rational eval(const Integer& n) const;
  Rational eval(long n) const { return eval(Integer(n)); }
};

FaulhaberPoly faulhaber(long a);

}  // namespace esum
