#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "esum/rational.hpp"

namespace esum {

// Symbolic atoms of the canonical basis: pi, odd zeta values zeta(s) with
// s >= 3, and irreducible linear Euler sums zH(p,r) = sum_n H_n^(p)/n^r.
// Even zeta values never appear (rewritten into pi powers at construction);
// neither do zeta(0), zeta(1) or negative arguments.
class Atom {
 public:
  enum class Kind { Pi = 0, ZetaOdd = 1, EulerSum = 2 };

  static Atom pi() { return Atom(Kind::Pi, 0, 0); }
  static Atom zeta_odd(int s);
  static Atom euler_sum(int p, int r);

  Kind kind() const { return kind_; }
  int zeta_index() const { return a_; }
  int euler_p() const { return a_; }
  int euler_r() const { return b_; }

  // weight(pi) = 1, weight(zeta(s)) = s, weight(zH(p,r)) = p + r
  int weight() const;

  friend auto operator<=>(const Atom&, const Atom&) = default;

 private:
  Atom(Kind k, int a, int b) : kind_(k), a_(a), b_(b) {}
  Kind kind_;
  int a_;
  int b_;
};

// Product of atom powers; the empty product is the constant monomial 1.
// Factors are kept sorted ascending by atom with strictly positive exponents.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(Atom a, int exp = 1);

  Monomial operator*(const Monomial& o) const;
  int weight() const;
  bool is_constant() const { return factors_.empty(); }
  bool has_euler_atom() const;
  const std::vector<std::pair<Atom, int>>& factors() const { return factors_; }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::pair<Atom, int>> factors_;
};

int weight_of(const Monomial& m);

// Display (and canonical map) order: descending weight, then descending
// comparison of the factor lists read from the largest atom down. Puts
// zeta(9) before pi^2*zeta(7) before pi^4*zeta(5) within one weight, and the
// constant term last.
struct MonomialOrder {
  bool operator()(const Monomial& x, const Monomial& y) const;
};

enum class RenderFormat { Plain, Latex, Json };

// Canonical rational-linear combination of monomials. No zero coefficients
// are stored, so equality of the term maps is canonical equality.
class ZExpr {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  ZExpr() = default;

  static ZExpr from_rational(const Rational& c);
  static ZExpr from_atom(Atom a, int exp = 1);

  ZExpr operator+(const ZExpr& o) const;
  ZExpr operator-(const ZExpr& o) const;
  ZExpr operator-() const;
  ZExpr operator*(const ZExpr& o) const;
  ZExpr& operator+=(const ZExpr& o);
  ZExpr& operator-=(const ZExpr& o);
  ZExpr scaled(const Rational& c) const;

  bool is_zero() const { return terms_.empty(); }
  bool has_euler_atom() const;
  const TermMap& terms() const { return terms_; }

  friend bool operator==(const ZExpr&, const ZExpr&) = default;

  std::string render(RenderFormat format) const;
  std::string render_json() const;

  // Inverse of render(Plain) on its own output; also accepts "1*" unit
  // coefficients and U+2212 minus signs.
  static ZExpr parse_plain(std::string_view text);

 private:
  void add_term(const Monomial& m, const Rational& c);
  TermMap terms_;
};

// zeta(s) as a ZExpr: s = 0 -> -1/2, even s >= 2 -> rational multiple of
// pi^s via Bernoulli numbers, odd s >= 3 -> single atom. s = 1 is a pole,
// s < 0 unsupported.
ZExpr zeta_value(int s);

}  // namespace esum
