#include "esum/euler_reduce.hpp"

#include "doctest.h"
#include "esum/error.hpp"
#include "reference_values.hpp"

using namespace esum;
using esum::testdata::parse;

namespace {
Rational R(long a, long b = 1) { return make_rational(a, b); }
}

TEST_CASE("mu examples") {
  CHECK(mu(1, 3) == ZExpr::from_rational(R(11, 18)));
  CHECK(mu(2, 1) == parse("1/6*pi^2 - 1"));
  CHECK(mu(3, 1) == parse("zeta(3) - 1/6*pi^2 + 1"));
  CHECK_THROWS_AS(mu(0, 1), PreconditionError);
  CHECK_THROWS_AS(mu(2, 0), PreconditionError);
}

TEST_CASE("euler_basic examples") {
  CHECK(euler_basic(2) == parse("2*zeta(3)"));
  CHECK(euler_basic(3) == parse("1/72*pi^4"));
  CHECK(euler_basic(5) == parse("-1/2*zeta(3)^2 + 1/540*pi^6"));
  CHECK_THROWS_AS(euler_basic(1), PreconditionError);
}

TEST_CASE("euler_basic weight homogeneity") {
  for (long r = 2; r <= 12; ++r) {
    ZExpr e = euler_basic(r);
    for (const auto& [mono, c] : e.terms()) CHECK(mono.weight() == r + 1);
  }
}

TEST_CASE("euler_oddweight examples") {
  CHECK(euler_oddweight(2, 3) == parse("-9/2*zeta(5) + 1/2*pi^2*zeta(3)"));
  CHECK(euler_oddweight(3, 2) == parse("11/2*zeta(5) - 1/3*pi^2*zeta(3)"));
  CHECK(euler_oddweight(4, 5) ==
        parse("-125/2*zeta(9) + 35/6*pi^2*zeta(7) + 1/18*pi^4*zeta(5)"));
  CHECK_THROWS_AS(euler_oddweight(2, 4), PreconditionError);
}

TEST_CASE("reflection examples") {
  CHECK(reflection(2, 2) == parse("7/180*pi^4"));
  CHECK(reflection(4, 4) == parse("13/56700*pi^8"));
  CHECK(reflection(3, 5) == parse("1/9450*pi^8 + zeta(3)*zeta(5)"));
}

TEST_CASE("diagonal identity") {
  for (long p = 2; p <= 8; ++p) {
    CHECK(reduce_linear(p, p).scaled(2) ==
          zeta_value(static_cast<int>(2 * p)) +
              zeta_value(static_cast<int>(p)) * zeta_value(static_cast<int>(p)));
  }
}

TEST_CASE("reduce_linear dispatch") {
  CHECK(reduce_linear(0, 4) == parse("zeta(3)"));
  CHECK(reduce_linear(-1, 5) == parse("1/2*zeta(3) + 1/180*pi^4"));
  CHECK(reduce_linear(2, 4) == parse("zeta(3)^2 - 1/2835*pi^6"));
  CHECK(reduce_linear(3, 5) == ZExpr::from_atom(Atom::euler_sum(3, 5)));
  CHECK(reduce_linear(5, 3) == parse("1/9450*pi^8 + zeta(3)*zeta(5) - zH(3,5)"));
  CHECK_THROWS_AS(reduce_linear(2, 1), PreconditionError);
  CHECK_THROWS_AS(reduce_linear(0, 2), PreconditionError);
  CHECK_THROWS_AS(reduce_linear(-2, 4), PreconditionError);
}

TEST_CASE("reduce_linear reproduces the whole linear table") {
  for (const auto& e : testdata::tablo_values()) {
    CAPTURE(e.p);
    CAPTURE(e.r);
    CHECK(reduce_linear(e.p, e.r) == parse(e.value));
  }
}

TEST_CASE("hyperharmonic_euler examples") {
  CHECK(hyperharmonic_euler(1, 3) == parse("1/72*pi^4"));
  CHECK(hyperharmonic_euler(2, 3) == parse("2*zeta(3) + 1/72*pi^4 - 1/6*pi^2"));
  CHECK_THROWS_AS(hyperharmonic_euler(3, 3), PreconditionError);
}

TEST_CASE("path agreement: hyperharmonic route vs general route") {
  for (long order = 2; order <= 5; ++order) {
    for (long r = order + 1; r <= 9; ++r) {
      CAPTURE(order);
      CAPTURE(r);
      CHECK(hyperharmonic_euler(order, r) == hyper_reduce(1, order, r));
    }
  }
}

TEST_CASE("hyper_reduce: order 1 pass-through") {
  CHECK(hyper_reduce(2, 1, 2) == parse("7/360*pi^4"));
}

TEST_CASE("hyper_reduce: worked examples") {
  for (const auto& e : testdata::worked_examples()) {
    CAPTURE(e.spec.p);
    CAPTURE(e.spec.order);
    CAPTURE(e.spec.r);
    CHECK(hyper_reduce(e.spec).scaled(e.scale_num) == parse(e.value));
  }
}

TEST_CASE("hyper_reduce: precondition errors") {
  CHECK_THROWS_WITH_AS(hyper_reduce(1, 3, 3), "requires r > q+1", PreconditionError);
  CHECK_THROWS_AS(hyper_reduce(1, 1, 1), PreconditionError);
  CHECK_THROWS_AS(hyper_reduce(0, 2, 5), PreconditionError);
  CHECK(validation_error(EulerSumSpec{1, 3, 3}).has_value());
  CHECK(!validation_error(EulerSumSpec{1, 3, 4}).has_value());
  CHECK(!validation_error(EulerSumSpec{0, 1, 3}).has_value());
  CHECK(validation_error(EulerSumSpec{0, 1, 2}).has_value());
}

TEST_CASE("weight gradation") {
  for (long p = 1; p <= 5; ++p) {
    for (long order = 2; order <= 4; ++order) {
      long q = order - 1;
      for (long r = order + 1; r <= 8; ++r) {
        ZExpr e = hyper_reduce(p, order, r);
        long lo = (p > q) ? p + r - q : p + r - q - 1;
        for (const auto& [mono, c] : e.terms()) {
          CAPTURE(p);
          CAPTURE(order);
          CAPTURE(r);
          CHECK(mono.weight() >= lo);
          CHECK(mono.weight() <= p + r);
        }
      }
    }
  }
}

TEST_CASE("reflection_hyper equals the sum of both orientations") {
  struct Tuple {
    long p, r, order;
  };
  for (const Tuple& t : {Tuple{4, 4, 2}, Tuple{5, 3, 2}, Tuple{6, 4, 3}, Tuple{6, 6, 4}}) {
    CAPTURE(t.p);
    CAPTURE(t.r);
    CAPTURE(t.order);
    ZExpr lhs = reflection_hyper(t.p, t.order, t.r);
    CHECK(lhs == hyper_reduce(t.p, t.order, t.r) + hyper_reduce(t.r, t.order, t.p));
    CHECK(!lhs.has_euler_atom());
  }
  CHECK_THROWS_AS(reflection_hyper(3, 3, 5), PreconditionError);   // p <= q+1
  CHECK_THROWS_AS(reflection_hyper(5, 2, 4), PreconditionError);   // odd weight
}

TEST_CASE("atoms in outputs are reflection-normalized to p < r") {
  for (long p = 2; p <= 7; ++p) {
    for (long r = 2; r <= 7; ++r) {
      if (p == r || (p + r) % 2 == 1) continue;
      ZExpr e = reduce_linear(p, r);
      for (const auto& [mono, c] : e.terms()) {
        for (const auto& [atom, exp] : mono.factors()) {
          if (atom.kind() == Atom::Kind::EulerSum) CHECK(atom.euler_p() < atom.euler_r());
        }
      }
    }
  }
}
