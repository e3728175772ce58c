#include "curve.hpp"

#include "errors.hpp"
#include "linalg.hpp"

namespace detrep {

PlaneCurve new_curve(const HomogPoly& f) { return new_curve(f, HomogPoly::variable(2)); }

PlaneCurve new_curve(const HomogPoly& f, const HomogPoly& hyperplane) {
  if (f.is_zero() || f.degree() < 3)
    fail(Err::DegreeTooSmall, "curve degree must be at least 3");
  if (hyperplane.degree() != 1 || hyperplane.is_zero())
    fail(Err::Internal, "hyperplane form must be linear");
  Ideal jac(std::vector<HomogPoly>{f, f.derivative(0), f.derivative(1), f.derivative(2)});
  Ideal sat_jac = saturate(jac);
  if (!sat_jac.is_unit()) {
    std::string gens;
    for (const auto& g : sat_jac.groebner()) {
      if (!gens.empty()) gens += ", ";
      gens += poly_to_string(g);
    }
    fail(Err::NotSmooth, "curve is singular; saturated Jacobian ideal (" + gens + ")");
  }
  auto data = std::make_shared<PlaneCurve::Data>();
  data->f = f.scaled(Rat(1) / f.content() * (sgn(f.lead_coeff()) < 0 ? -1 : 1));
  data->hyperplane = hyperplane;
  data->curve_ideal = Ideal({data->f});
  int d = f.degree();
  data->genus = (d - 1) * (d - 2) / 2;
  PlaneCurve c;
  c.d_ = std::move(data);
  return c;
}

EffectiveDivisor zero_effective(const PlaneCurve& c) {
  return EffectiveDivisor(c, Ideal::unit(), 0);
}

EffectiveDivisor make_effective(const PlaneCurve& c, const Ideal& i) {
  Ideal sat = saturate(ideal_sum(i, c.curve_ideal()));
  int deg = degree_of_scheme(sat);
  return EffectiveDivisor(c, sat, deg);
}

EffectiveDivisor point_divisor(const PlaneCurve& c, const std::array<Int, 3>& p) {
  if (sgn(p[0]) == 0 && sgn(p[1]) == 0 && sgn(p[2]) == 0)
    fail(Err::Syntax, "the zero triple is not a projective point");
  if (c.f().eval(Rat(p[0]), Rat(p[1]), Rat(p[2])) != 0)
    fail(Err::PointNotOnCurve, "point does not lie on the curve");
  Mat row{{Rat(p[0]), Rat(p[1]), Rat(p[2])}};
  Mat kern = kernel_basis(row, 3);  // two independent linear forms vanishing at p
  std::vector<HomogPoly> forms;
  for (const auto& v : kern)
    forms.push_back(HomogPoly(poly_from_coords(v, monomial_basis(1), 1).poly().primitive(), 1));
  EffectiveDivisor e = make_effective(c, Ideal(std::move(forms)));
  if (e.degree() != 1) fail(Err::Internal, "rational point of unexpected degree");
  return e;
}

EffectiveDivisor conjugate_pair_divisor(const PlaneCurve& c, std::vector<HomogPoly> forms) {
  return make_effective(c, Ideal(std::move(forms)));  // NotZeroDimensional surfaces from degree
}

EffectiveDivisor divisor_of_form(const PlaneCurve& c, const HomogPoly& g) {
  if (g.is_zero() || member(g, c.curve_ideal()))
    fail(Err::FormVanishesOnCurve, "form vanishes identically on the curve");
  EffectiveDivisor e = make_effective(c, Ideal({g}));
  if (e.degree() != c.d() * g.degree()) fail(Err::Internal, "form divisor degree violates Bezout");
  return e;
}

EffectiveDivisor effective_sum(const EffectiveDivisor& a, const EffectiveDivisor& b) {
  if (!a.curve().same_as(b.curve())) fail(Err::Internal, "divisors on different curves");
  if (a.degree() == 0) return b;
  if (b.degree() == 0) return a;
  EffectiveDivisor e = make_effective(a.curve(), ideal_product(a.ideal(), b.ideal()));
  if (e.degree() != a.degree() + b.degree())
    fail(Err::Internal, "divisor sum degree is not additive");
  return e;
}

Divisor::Divisor(EffectiveDivisor plus, EffectiveDivisor minus)
    : plus_(std::move(plus)), minus_(std::move(minus)) {
  if (!plus_.curve().same_as(minus_.curve())) fail(Err::Internal, "divisor parts on different curves");
}

Divisor as_divisor(const EffectiveDivisor& e) { return Divisor(e, zero_effective(e.curve())); }

Divisor zero_divisor(const PlaneCurve& c) { return Divisor(zero_effective(c), zero_effective(c)); }

Divisor hyperplane_divisor(const PlaneCurve& c) {
  return as_divisor(divisor_of_form(c, c.hyperplane_form()));
}

Divisor div_add(const Divisor& a, const Divisor& b) {
  return Divisor(effective_sum(a.plus(), b.plus()), effective_sum(a.minus(), b.minus()));
}

Divisor div_sub(const Divisor& a, const Divisor& b) { return div_add(a, div_neg(b)); }

Divisor div_neg(const Divisor& a) { return Divisor(a.minus(), a.plus()); }

Divisor div_scale(const Divisor& a, long n) {
  Divisor base = n < 0 ? div_neg(a) : a;
  long k = n < 0 ? -n : n;
  Divisor acc = zero_divisor(a.curve());
  for (long i = 0; i < k; ++i) acc = div_add(acc, base);
  return acc;
}

}  // namespace detrep
