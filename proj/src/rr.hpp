#pragma once

#include "curve.hpp"

namespace detrep {

// f = numerator/denominator as a rational function on the curve, of the
// given Serre twist (deg num = deg den + twist). Equality as sections is
// congruence of cross products mod (F).
struct RationalSection {
  HomogPoly numerator;
  HomogPoly denominator;
  int twist = 0;
};

// Twist-independent data of L(D): a form G0 with div(G0) = D₊ + E, and the
// obstruction ideal of E + D₋. Every graded piece L(D + twist·H) is then a
// slice of the obstruction ideal, so one core serves all twists of the same
// divisor (the matrix construction reads twists 1 and 2 off one core).
class RRCore {
 public:
  RRCore(const PlaneCurve& c, const Divisor& d);

  const PlaneCurve& curve() const { return curve_; }
  const HomogPoly& g0() const { return g0_; }
  int n() const { return g0_.degree(); }
  const Ideal& obstruction() const { return obs_.ideal(); }

  int h0(int twist) const;  // graded dimension count, no linear algebra
  // canonical numerator basis of L(D + twist·H) over denominator G0
  std::vector<HomogPoly> basis(int twist) const;
  std::vector<RationalSection> sections(int twist) const;

 private:
  PlaneCurve curve_;
  HomogPoly g0_;
  EffectiveDivisor obs_;  // E + D₋ as an effective divisor
};

struct RRSpace {
  Divisor divisor;
  int twist;
  HomogPoly denominator;
  std::vector<HomogPoly> basis;
  int h0;
};

RRSpace rr_space(const PlaneCurve& c, const Divisor& d, int twist);
int h0(const PlaneCurve& c, const Divisor& d);

bool is_noneffective(const PlaneCurve& c, const Divisor& d);        // deg must be g−1
bool is_principal(const PlaneCurve& c, const Divisor& e);           // deg must be 0
bool linearly_equivalent(const PlaneCurve& c, const Divisor& a, const Divisor& b);
bool is_theta_characteristic(const PlaneCurve& c, const Divisor& d);  // 2D ~ (d−3)H

}  // namespace detrep
