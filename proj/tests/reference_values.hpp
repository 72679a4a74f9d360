#pragma once

// Frozen reference values for the linear-sum table and the worked
// hyperharmonic examples, as plain-grammar strings. Three of the worked
// displays circulate with typos (sign slip, a dropped zeta(3)^2/6 term and
// wrong pi^6 coefficient, and weight-inconsistent bracket contents); the
// values here are the corrected forms, cross-checked against direct
// summation of the defining series to 25+ digits.

#include <utility>
#include <vector>

#include "esum/euler_reduce.hpp"
#include "esum/zexpr.hpp"

namespace esum::testdata {

struct LinearEntry {
  long p;
  long r;
  const char* value;
};

inline const std::vector<LinearEntry>& tablo_values() {
  static const std::vector<LinearEntry> v = {
      {1, 2, "2*zeta(3)"},
      {1, 3, "1/72*pi^4"},
      {1, 4, "3*zeta(5) - 1/6*pi^2*zeta(3)"},
      {1, 5, "-1/2*zeta(3)^2 + 1/540*pi^6"},
      {2, 2, "7/360*pi^4"},
      {2, 3, "-9/2*zeta(5) + 1/2*pi^2*zeta(3)"},
      {2, 4, "zeta(3)^2 - 1/2835*pi^6"},
      {2, 5, "-10*zeta(7) + 5/6*pi^2*zeta(5) + 1/45*pi^4*zeta(3)"},
      {3, 2, "11/2*zeta(5) - 1/3*pi^2*zeta(3)"},
      {3, 3, "1/2*zeta(3)^2 + 1/1890*pi^6"},
      {3, 4, "18*zeta(7) - 5/3*pi^2*zeta(5)"},
      {3, 6, "85/2*zeta(9) - 7/2*pi^2*zeta(7) - 1/15*pi^4*zeta(5)"},
      {4, 2, "-zeta(3)^2 + 37/11340*pi^6"},
      {4, 3, "-17*zeta(7) + 5/3*pi^2*zeta(5) + 1/90*pi^4*zeta(3)"},
      {4, 4, "13/113400*pi^8"},
      {4, 5, "-125/2*zeta(9) + 35/6*pi^2*zeta(7) + 1/18*pi^4*zeta(5)"},
      {5, 2, "11*zeta(7) - 2/3*pi^2*zeta(5) - 1/45*pi^4*zeta(3)"},
      {5, 4, "127/2*zeta(9) - 35/6*pi^2*zeta(7) - 2/45*pi^4*zeta(5)"},
      {5, 5, "1/2*zeta(5)^2 + 1/187110*pi^10"},
      {5, 6, "463/2*zeta(11) - 21*pi^2*zeta(9) - 7/30*pi^4*zeta(7)"},
      {6, 3, "-83/2*zeta(9) + 7/2*pi^2*zeta(7) + 1/15*pi^4*zeta(5) + 1/945*pi^6*zeta(3)"},
      {6, 5, "-461/2*zeta(11) + 21*pi^2*zeta(9) + 7/30*pi^4*zeta(7) + 1/945*pi^6*zeta(5)"},
  };
  return v;
}

struct HyperEntry {
  EulerSumSpec spec;
  long scale_num;  // the reference display shows scale_num * value
  const char* value;
  bool corrected;  // true when the circulated display has a typo
};

inline const std::vector<HyperEntry>& worked_examples() {
  static const std::vector<HyperEntry> v = {
      {{1, 4, 5}, 1,
       "11/2*zeta(5) - zeta(3) - 11/36*pi^2*zeta(3) - 1/2*zeta(3)^2 - 11/216*pi^2 - 1/810*pi^4"
       " + 1/540*pi^6",
       true},
      {{2, 4, 5}, 1,
       "-10*zeta(7) + 5/6*pi^2*zeta(5) - 21/2*zeta(5) + 1/45*pi^4*zeta(3) + 5/6*pi^2*zeta(3)"
       " + 5/12*zeta(3) + 11/4*zeta(3)^2 + 7/1080*pi^4 - 55/13608*pi^6",
       false},
      {{3, 4, 5}, 1,
       "zH(3,5) + 154/3*zeta(7) + 14/3*zeta(5) - 55/12*pi^2*zeta(5) - 2*zeta(3)^2"
       " - 7/18*pi^2*zeta(3) - 11/270*pi^4*zeta(3) - 1/540*pi^4 + 1/324*pi^6",
       false},
      {{4, 4, 5}, 1,
       "-11/6*zH(3,5) + 1/6*zeta(3)^2 - 125/2*zeta(9) + 35/6*pi^2*zeta(7) - 63*zeta(7)"
       " + 35/6*pi^2*zeta(5) + 1/18*pi^4*zeta(5) + 1/30*pi^4*zeta(3) - 1/4860*pi^6"
       " + 143/680400*pi^8",
       true},
      {{5, 4, 5}, 1,
       "231*zeta(9) + 21*zeta(7) - 385/18*pi^2*zeta(7) - 11/60*pi^4*zeta(5)"
       " - 23/12*pi^2*zeta(5) + 1/2*zeta(5)^2 + zeta(3)*zeta(5) - 7/540*pi^4*zeta(3)"
       " - 1/8100*pi^8 + 1/187110*pi^10",
       false},
      {{6, 5, 6}, 2,
       "-1925*zeta(11) + 175*pi^2*zeta(9) - 385*zeta(9) + 35*pi^2*zeta(7) + 35/18*pi^4*zeta(7)"
       " + 13/36*pi^4*zeta(5) + 5/1134*pi^6*zeta(5) - 35/12*zeta(5)^2 - 1/3*zeta(3)*zeta(5)"
       " + 1/1134*pi^6*zeta(3) + 31/680400*pi^8 + 1/29160*pi^10 + 1406/638512875*pi^12",
       true},
  };
  return v;
}

inline ZExpr parse(const char* s) { return ZExpr::parse_plain(s); }

}  // namespace esum::testdata
