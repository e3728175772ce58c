#pragma once

#include <array>
#include <memory>

#include "ideal.hpp"

namespace detrep {

// Smooth plane curve F = 0 of degree d ≥ 3 over Q. Construction certifies
// smoothness (saturated Jacobian ideal is the unit ideal). Values are cheap
// shared handles; divisors keep one and compare it by identity.
class PlaneCurve {
 public:
  const HomogPoly& f() const { return d_->f; }
  int d() const { return d_->f.degree(); }
  int genus() const { return d_->genus; }
  int canonical_twist() const { return d() - 3; }
  const Ideal& curve_ideal() const { return d_->curve_ideal; }  // (F)
  // the line realizing the Serre twist divisor H; Z unless configured
  const HomogPoly& hyperplane_form() const { return d_->hyperplane; }

  bool same_as(const PlaneCurve& o) const { return d_ == o.d_; }

 private:
  struct Data {
    HomogPoly f;
    HomogPoly hyperplane;
    Ideal curve_ideal;
    int genus = 0;
  };
  std::shared_ptr<const Data> d_;
  friend PlaneCurve new_curve(const HomogPoly&, const HomogPoly&);
};

PlaneCurve new_curve(const HomogPoly& f);  // H = Z
PlaneCurve new_curve(const HomogPoly& f, const HomogPoly& hyperplane);

// Effective divisor on a curve: a saturated homogeneous ideal containing (F)
// cutting a 0-dimensional subscheme, plus its degree. Never a point list, so
// conjugate point sets over extensions stay rational data.
class EffectiveDivisor {
 public:
  const PlaneCurve& curve() const { return curve_; }
  const Ideal& ideal() const { return ideal_; }
  int degree() const { return degree_; }

 private:
  EffectiveDivisor(PlaneCurve c, Ideal i, int deg)
      : curve_(std::move(c)), ideal_(std::move(i)), degree_(deg) {}
  PlaneCurve curve_;
  Ideal ideal_;
  int degree_;
  friend EffectiveDivisor make_effective(const PlaneCurve&, const Ideal&);
  friend EffectiveDivisor zero_effective(const PlaneCurve&);
};

// Formal difference of effective divisors. Representatives are never reduced;
// everything downstream is invariant under common components.
class Divisor {
 public:
  Divisor(EffectiveDivisor plus, EffectiveDivisor minus);
  const EffectiveDivisor& plus() const { return plus_; }
  const EffectiveDivisor& minus() const { return minus_; }
  const PlaneCurve& curve() const { return plus_.curve(); }
  int degree() const { return plus_.degree() - minus_.degree(); }

 private:
  EffectiveDivisor plus_, minus_;
};

EffectiveDivisor zero_effective(const PlaneCurve& c);
// saturate(I + (F)) checked 0-dimensional; the workhorse constructor
EffectiveDivisor make_effective(const PlaneCurve& c, const Ideal& i);

EffectiveDivisor point_divisor(const PlaneCurve& c, const std::array<Int, 3>& p);
EffectiveDivisor conjugate_pair_divisor(const PlaneCurve& c, std::vector<HomogPoly> forms);
EffectiveDivisor divisor_of_form(const PlaneCurve& c, const HomogPoly& g);

// divisor sum on the curve: saturate(I·J + (F)); degrees add
EffectiveDivisor effective_sum(const EffectiveDivisor& a, const EffectiveDivisor& b);

Divisor as_divisor(const EffectiveDivisor& e);
Divisor zero_divisor(const PlaneCurve& c);
Divisor hyperplane_divisor(const PlaneCurve& c);
Divisor div_add(const Divisor& a, const Divisor& b);
Divisor div_sub(const Divisor& a, const Divisor& b);
Divisor div_neg(const Divisor& a);
Divisor div_scale(const Divisor& a, long n);

}  // namespace detrep
