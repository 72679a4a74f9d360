#include "esum/combinatorics.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "esum/error.hpp"

namespace esum {

Integer factorial(long n) {
  if (n < 0) throw PreconditionError("factorial requires n >= 0");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return Integer(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational harmonic(long n, long p) {
  if (n < 0) throw PreconditionError("harmonic requires n >= 0");
  Rational sum(0);
  for (long k = 1; k <= n; ++k) {
    if (p >= 0) {
      sum += make_rational(Integer(1), pow_integer(Integer(k), static_cast<unsigned long>(p)));
    } else {
      sum += Rational(pow_integer(Integer(k), static_cast<unsigned long>(-p)));
    }
  }
  return sum;
}

namespace {

// Row cache for hyperharmonic_def: rows[(p,q)][n] = H_n^(p,q), rows grown on
// demand as prefix sums of the previous level. Guarded so concurrent callers
// see single-threaded-equivalent behavior.
std::mutex hh_mutex;
std::map<std::pair<long, long>, std::vector<Rational>>& hh_rows() {
  static std::map<std::pair<long, long>, std::vector<Rational>> rows;
  return rows;
}

Rational base_term(long n, long p) {
  if (p >= 0) {
    return make_rational(Integer(1), pow_integer(Integer(n), static_cast<unsigned long>(p)));
  }
  return Rational(pow_integer(Integer(n), static_cast<unsigned long>(-p)));
}

const Rational& hh_locked(long n, long p, long q) {
  auto& row = hh_rows()[{p, q}];
  if (row.empty()) row.emplace_back(0);  // H_0 = 0
  while (static_cast<long>(row.size()) <= n) {
    long m = static_cast<long>(row.size());
    if (q == 1) {
      row.push_back(row.back() + base_term(m, p));
    } else {
      row.push_back(row.back() + hh_locked(m, p, q - 1));
    }
  }
  return row[static_cast<size_t>(n)];
}

}  // namespace

Rational hyperharmonic_def(long n, long p, long q) {
  if (n < 0 || q < 0) throw PreconditionError("hyperharmonic_def requires n >= 0 and q >= 0");
  if (q == 0) {
    if (n == 0) {
      if (p > 0) throw PreconditionError("H_0^(p,0) is undefined for p > 0");
      return p == 0 ? Rational(1) : Rational(0);
    }
    return base_term(n, p);
  }
  if (n == 0) return Rational(0);
  std::lock_guard<std::mutex> lock(hh_mutex);
  return hh_locked(n, p, q);
}

Rational hyperharmonic_closed(long n, long p, long order) {
  if (order < 1) throw PreconditionError("hyperharmonic_closed requires order >= 1");
  if (n < 1) throw PreconditionError("hyperharmonic_closed requires n >= 1");
  long q = order - 1;
  Rational sum(0);
  for (long k = 0; k <= q; ++k) {
    Rational term = Rational(rstirling1(q, k, n + 1)) * harmonic(n, p - k);
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum / Rational(factorial(q));
}

Integer rstirling1(long q, long k, long r) {
  if (q < 0) throw PreconditionError("rstirling1 requires q >= 0");
  if (k < 0 || k > q) return Integer(0);
  // Expand (x+r)(x+r+1)...(x+r+q-1) iteratively; c[i] holds the coefficient
  // of x^i of the partial product.
  std::vector<Integer> c(static_cast<size_t>(q) + 1, Integer(0));
  c[0] = 1;
  for (long i = 0; i < q; ++i) {
    Integer a(r + i);
    for (long j = i + 1; j >= 1; --j) {
      c[static_cast<size_t>(j)] = c[static_cast<size_t>(j)] * a + c[static_cast<size_t>(j - 1)];
    }
    c[0] *= a;
  }
  return c[static_cast<size_t>(k)];
}

Integer stirling1(long q, long k) { return rstirling1(q, k, 0); }

Rational elem_symmetric(const std::vector<Rational>& values, long k) {
  if (k < 0) throw PreconditionError("elem_symmetric requires k >= 0");
  if (k == 0) return Rational(1);
  if (k > static_cast<long>(values.size())) return Rational(0);
  // e[j] after processing i values = e_j(values[0..i)).
  std::vector<Rational> e(static_cast<size_t>(k) + 1, Rational(0));
  e[0] = 1;
  long used = 0;
  for (const Rational& v : values) {
    ++used;
    for (long j = std::min(used, k); j >= 1; --j) {
      e[static_cast<size_t>(j)] += v * e[static_cast<size_t>(j - 1)];
    }
  }
  return e[static_cast<size_t>(k)];
}

namespace {

std::mutex bern_mutex;

// B+ convention; only B_1 differs from B- (it is +1/2). Standard recurrence
// sum_{k=0}^{m-1} C(m+1,k) B-_k = 0 with sign flip at index 1.
const Rational& bernoulli_locked(long n) {
  static std::vector<Rational> cache{Rational(1)};
  while (static_cast<long>(cache.size()) <= n) {
    long m = static_cast<long>(cache.size());
    Rational acc(0);
    for (long k = 0; k < m; ++k) {
      Rational bk = cache[static_cast<size_t>(k)];
      if (k == 1) bk = -bk;  // cache stores B+, recurrence needs B-
      acc += Rational(binomial(m + 1, k)) * bk;
    }
    Rational bm = -acc / Rational(m + 1);
    if (m == 1) bm = -bm;
    cache.push_back(bm);
  }
  return cache[static_cast<size_t>(n)];
}

}  // namespace

Rational bernoulli(long n) {
  if (n < 0) throw PreconditionError("bernoulli requires n >= 0");
  std::lock_guard<std::mutex> lock(bern_mutex);
  return bernoulli_locked(n);
}

Rational FaulhaberPoly::eval(const Integer& n) const {
  // Horner on coeff[degree-1]..coeff[0]; polynomial has no constant term.
  Rational acc(0);
  for (long i = degree - 1; i >= 0; --i) {
    acc = acc * Rational(n) + coeff[static_cast<size_t>(i)];
  }
  return acc * Rational(n);
}

FaulhaberPoly faulhaber(long a) {
  if (a < 0) throw PreconditionError("faulhaber requires a >= 0");
  // sum_{k<=n} k^a = (1/(a+1)) sum_{j=0}^{a} C(a+1,j) B+_j n^{a+1-j}
  FaulhaberPoly poly;
  poly.degree = a + 1;
  poly.coeff.assign(static_cast<size_t>(a) + 1, Rational(0));
  for (long j = 0; j <= a; ++j) {
    Rational c = Rational(binomial(a + 1, j)) * bernoulli(j) / Rational(a + 1);
    poly.coeff[static_cast<size_t>(a - j)] = c;  // multiplies n^(a+1-j)
  }
  return poly;
}

}  // namespace esum
