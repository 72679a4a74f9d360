#include "esum/zexpr.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "esum/combinatorics.hpp"
#include "esum/error.hpp"

namespace esum {

Atom Atom::zeta_odd(int s) {
  if (s < 3 || s % 2 == 0) throw PreconditionError("zeta atom requires odd s >= 3");
  return Atom(Kind::ZetaOdd, s, 0);
}

Atom Atom::euler_sum(int p, int r) {
  if (p < 2 || r < 2) throw PreconditionError("zH atom requires p, r >= 2");
  return Atom(Kind::EulerSum, p, r);
}

int Atom::weight() const {
  switch (kind_) {
    case Kind::Pi: return 1;
    case Kind::ZetaOdd: return a_;
    case Kind::EulerSum: return a_ + b_;
  }
  return 0;
}

Monomial::Monomial(Atom a, int exp) {
  if (exp < 0) throw PreconditionError("monomial exponents must be positive");
  if (exp > 0) factors_.emplace_back(a, exp);
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out;
  auto i = factors_.begin();
  auto j = o.factors_.begin();
  while (i != factors_.end() || j != o.factors_.end()) {
    if (j == o.factors_.end() || (i != factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

int Monomial::weight() const {
  int w = 0;
  for (const auto& [atom, exp] : factors_) w += atom.weight() * exp;
  return w;
}

bool Monomial::has_euler_atom() const {
  return std::any_of(factors_.begin(), factors_.end(),
                     [](const auto& f) { return f.first.kind() == Atom::Kind::EulerSum; });
}

int weight_of(const Monomial& m) { return m.weight(); }

bool MonomialOrder::operator()(const Monomial& x, const Monomial& y) const {
  int wx = x.weight(), wy = y.weight();
  if (wx != wy) return wx > wy;
  // Equal weight: compare from the largest atom down; the larger atom (or,
  // at equal atoms, the larger exponent) displays first.
  const auto& fx = x.factors();
  const auto& fy = y.factors();
  auto i = fx.rbegin();
  auto j = fy.rbegin();
  for (; i != fx.rend() && j != fy.rend(); ++i, ++j) {
    if (i->first != j->first) return j->first < i->first;
    if (i->second != j->second) return i->second > j->second;
  }
  return false;  // equal weight with one a suffix of the other cannot occur
}

ZExpr ZExpr::from_rational(const Rational& c) {
  ZExpr e;
  e.add_term(Monomial(), c);
  return e;
}

ZExpr ZExpr::from_atom(Atom a, int exp) {
  ZExpr e;
  e.add_term(Monomial(a, exp), Rational(1));
  return e;
}

void ZExpr::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ZExpr ZExpr::operator+(const ZExpr& o) const {
  ZExpr out = *this;
  out += o;
  return out;
}

ZExpr& ZExpr::operator+=(const ZExpr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ZExpr ZExpr::operator-(const ZExpr& o) const {
  ZExpr out = *this;
  out -= o;
  return out;
}

ZExpr& ZExpr::operator-=(const ZExpr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ZExpr ZExpr::operator-() const {
  ZExpr out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

ZExpr ZExpr::operator*(const ZExpr& o) const {
  ZExpr out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      out.add_term(ma * mb, ca * cb);
    }
  }
  return out;
}

ZExpr ZExpr::scaled(const Rational& c) const {
  ZExpr out;
  if (c == 0) return out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
  return out;
}

bool ZExpr::has_euler_atom() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.has_euler_atom(); });
}

ZExpr zeta_value(int s) {
  if (s == 1) throw PreconditionError("zeta(1) diverges (pole)");
  if (s < 0) throw PreconditionError("zeta(s) for s < 0 is not supported");
  if (s == 0) return ZExpr::from_rational(make_rational(-1, 2));
  if (s % 2 == 1) return ZExpr::from_atom(Atom::zeta_odd(s));
  // zeta(2j) = (-1)^(j+1) B_2j (2pi)^(2j) / (2 (2j)!)
  long j = s / 2;
  Rational c = bernoulli(s) * Rational(pow_integer(Integer(2), static_cast<unsigned long>(s))) /
               (Rational(2) * Rational(factorial(s)));
  if (j % 2 == 0) c = -c;
  return ZExpr::from_atom(Atom::pi(), s).scaled(c);
}

namespace {

std::string atom_plain(const Atom& a) {
  switch (a.kind()) {
    case Atom::Kind::Pi: return "pi";
    case Atom::Kind::ZetaOdd: return "zeta(" + std::to_string(a.zeta_index()) + ")";
    case Atom::Kind::EulerSum:
      return "zH(" + std::to_string(a.euler_p()) + "," + std::to_string(a.euler_r()) + ")";
  }
  return {};
}

std::string atom_latex(const Atom& a) {
  switch (a.kind()) {
    case Atom::Kind::Pi: return "\\pi";
    case Atom::Kind::ZetaOdd: return "\\zeta(" + std::to_string(a.zeta_index()) + ")";
    case Atom::Kind::EulerSum:
      return "\\zeta_{H^{(" + std::to_string(a.euler_p()) + ")}}(" +
             std::to_string(a.euler_r()) + ")";
  }
  return {};
}

std::string coeff_latex(const Rational& c) {
  if (c.get_den() == 1) return c.get_num().get_str();
  return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
}

}  // namespace

std::string ZExpr::render(RenderFormat format) const {
  if (format == RenderFormat::Json) return render_json();
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, coeff] : terms_) {
    Rational mag = coeff < 0 ? Rational(-coeff) : coeff;
    if (first) {
      if (coeff < 0) out += "-";
      first = false;
    } else {
      out += coeff < 0 ? " - " : " + ";
    }
    bool unit = (mag == 1) && !mono.is_constant();
    if (format == RenderFormat::Plain) {
      if (!unit) out += to_string(mag);
      bool need_star = !unit;
      for (const auto& [atom, exp] : mono.factors()) {
        if (need_star) out += "*";
        out += atom_plain(atom);
        if (exp > 1) out += "^" + std::to_string(exp);
        need_star = true;
      }
    } else {
      if (!unit) out += coeff_latex(mag);
      for (const auto& [atom, exp] : mono.factors()) {
        out += atom_latex(atom);
        if (exp > 1) out += "^{" + std::to_string(exp) + "}";
      }
    }
  }
  return out;
}

namespace {

// Minimal recursive-descent parser for the plain grammar:
//   expression := term ((" + " | " - ") term)*
//   term       := [coeff] ("*" factor)* | coeff | factor ("*" factor)*
//   factor     := "pi" | "zeta(s)" | "zH(p,r)" with optional "^k"
struct Parser {
  std::string_view s;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw PreconditionError("parse error at offset " + std::to_string(pos) + ": " + why);
  }
  bool eof() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }
  bool consume(std::string_view tok) {
    if (s.substr(pos, tok.size()) == tok) {
      pos += tok.size();
      return true;
    }
    return false;
  }
  // U+2212 appears in typeset output; treat it as '-'.
  bool consume_minus() { return consume("-") || consume("−"); }

  Integer integer() {
    size_t start = pos;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    if (pos == start) fail("expected integer");
    return Integer(std::string(s.substr(start, pos - start)), 10);
  }

  long small_int() { return integer().get_si(); }

  Rational coefficient() {
    Integer num = integer();
    if (consume("/")) {
      Integer den = integer();
      return make_rational(num, den);
    }
    return Rational(num);
  }

  int exponent() {
    if (consume("^")) return static_cast<int>(small_int());
    return 1;
  }

  Monomial factor() {
    if (consume("pi")) return Monomial(Atom::pi(), exponent());
    if (consume("zeta(")) {
      long v = small_int();
      if (!consume(")")) fail("expected ')'");
      return Monomial(Atom::zeta_odd(static_cast<int>(v)), exponent());
    }
    if (consume("zH(")) {
      long p = small_int();
      if (!consume(",")) fail("expected ','");
      long r = small_int();
      if (!consume(")")) fail("expected ')'");
      return Monomial(Atom::euler_sum(static_cast<int>(p), static_cast<int>(r)), exponent());
    }
    fail("expected factor");
  }
};

}  // namespace

ZExpr ZExpr::parse_plain(std::string_view text) {
  if (text == "0") return ZExpr();
  Parser p{text};
  ZExpr acc;
  bool negative = p.consume_minus();
  while (true) {
    // one term
    Rational c(1);
    Monomial mono;
    if (!p.eof() && std::isdigit(static_cast<unsigned char>(p.peek()))) {
      c = p.coefficient();
      while (p.consume("*")) mono = mono * p.factor();
    } else {
      mono = p.factor();
      while (p.consume("*")) mono = mono * p.factor();
    }
    if (negative) c = -c;
    acc.add_term(mono, c);
    if (p.eof()) break;
    if (p.consume(" + ")) {
      negative = false;
    } else if (p.consume(" - ") || p.consume(" − ")) {
      negative = true;
    } else {
      p.fail("expected ' + ' or ' - '");
    }
  }
  return acc;
}

std::string ZExpr::render_json() const {
  // {"terms":[{"coeff":"a/b","monomial":[{"atom":...,"arg":[...],"exp":k}]}]}
  std::ostringstream out;
  out << "{\"terms\":[";
  bool first_term = true;
  for (const auto& [mono, coeff] : terms_) {
    if (!first_term) out << ",";
    first_term = false;
    out << "{\"coeff\":\"" << to_string(coeff) << "\",\"monomial\":[";
    bool first_factor = true;
    for (const auto& [atom, exp] : mono.factors()) {
      if (!first_factor) out << ",";
      first_factor = false;
      switch (atom.kind()) {
        case Atom::Kind::Pi:
          out << "{\"atom\":\"pi\",\"arg\":[]";
          break;
        case Atom::Kind::ZetaOdd:
          out << "{\"atom\":\"zeta\",\"arg\":[" << atom.zeta_index() << "]";
          break;
        case Atom::Kind::EulerSum:
          out << "{\"atom\":\"zH\",\"arg\":[" << atom.euler_p() << "," << atom.euler_r() << "]";
          break;
      }
      out << ",\"exp\":" << exp << "}";
    }
    out << "]}";
  }
  out << "]}";
  return out.str();
}

}  // namespace esum
