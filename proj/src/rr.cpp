#include "rr.hpp"

#include "errors.hpp"
#include "linalg.hpp"

namespace detrep {

namespace {

int monomial_count(int n) { return n < 0 ? 0 : (n + 1) * (n + 2) / 2; }

}  // namespace

RRCore::RRCore(const PlaneCurve& c, const Divisor& d)
    : curve_(c), g0_(HomogPoly::constant(Rat(1))), obs_(zero_effective(c)) {
  if (!c.same_as(d.curve())) fail(Err::Internal, "divisor on a different curve");
  const EffectiveDivisor& dp = d.plus();
  int deg_p = dp.degree();
  int n = (deg_p + c.d() - 1) / c.d();
  while (graded_dim(dp.ideal(), n) <= monomial_count(n - c.d())) ++n;
  HomogPoly g0 = HomogPoly::constant(Rat(0));
  for (const auto& cand : graded_basis(dp.ideal(), n)) {
    if (!member(cand, c.curve_ideal())) {
      g0 = HomogPoly(cand.poly().primitive(), n);
      break;
    }
  }
  if (g0.is_zero()) fail(Err::Internal, "no denominator form outside (F)");
  g0_ = g0;
  // residual: div(G0) = D₊ + E on the curve
  Ideal g0_divisor = saturate(ideal_sum(Ideal({g0}), c.curve_ideal()));
  Ideal residual = saturate(ideal_colon(g0_divisor, dp.ideal()));
  EffectiveDivisor e = make_effective(c, residual);
  if (e.degree() != n * c.d() - deg_p) fail(Err::Internal, "residual divisor has wrong degree");
  obs_ = effective_sum(e, d.minus());
}

int RRCore::h0(int twist) const {
  int m = n() + twist;
  if (m < 0) return 0;
  return graded_dim(obs_.ideal(), m) - monomial_count(m - curve_.d());
}

std::vector<HomogPoly> RRCore::basis(int twist) const {
  int m = n() + twist;
  if (m < 0) return {};
  // reduce each obstruction-ideal basis form mod F, then row reduce; the
  // nonzero rows are canonical numerators of L(D + twist·H)
  auto monos = monomial_basis(m);
  Mat rows;
  for (const auto& w : graded_basis(obs_.ideal(), m)) {
    HomogPoly r = normal_form(w, curve_.curve_ideal());
    if (!r.is_zero()) rows.push_back(poly_coords(r, monos));
  }
  rref(rows);
  std::vector<HomogPoly> out;
  for (const auto& row : rows) {
    HomogPoly p = poly_from_coords(row, monos, m);
    if (p.is_zero()) continue;
    if (!member(p, obs_.ideal())) fail(Err::Internal, "basis numerator escaped the obstruction ideal");
    out.push_back(HomogPoly(p.poly().primitive(), m));
  }
  if (int(out.size()) != h0(twist)) fail(Err::Internal, "graded count and basis size disagree");
  return out;
}

std::vector<RationalSection> RRCore::sections(int twist) const {
  std::vector<RationalSection> out;
  for (auto& b : basis(twist)) out.push_back({b, g0_, twist});
  return out;
}

RRSpace rr_space(const PlaneCurve& c, const Divisor& d, int twist) {
  RRCore core(c, d);
  std::vector<HomogPoly> basis = core.basis(twist);
  int n = int(basis.size());
  return RRSpace{d, twist, core.g0(), std::move(basis), n};
}

int h0(const PlaneCurve& c, const Divisor& d) { return RRCore(c, d).h0(0); }

bool is_noneffective(const PlaneCurve& c, const Divisor& d) {
  if (d.degree() != c.genus() - 1)
    fail(Err::WrongDegree, "non-effectiveness is defined for degree g-1 classes");
  return h0(c, d) == 0;
}

bool is_principal(const PlaneCurve& c, const Divisor& e) {
  if (e.degree() != 0) fail(Err::WrongDegree, "principality test needs a degree-0 divisor");
  return h0(c, e) == 1;
}

bool linearly_equivalent(const PlaneCurve& c, const Divisor& a, const Divisor& b) {
  if (a.degree() != b.degree())
    fail(Err::WrongDegree, "linear equivalence compares divisors of equal degree");
  return is_principal(c, div_sub(a, b));
}

bool is_theta_characteristic(const PlaneCurve& c, const Divisor& d) {
  if (d.degree() != c.genus() - 1)
    fail(Err::WrongDegree, "theta characteristics have degree g-1");
  return linearly_equivalent(c, div_scale(d, 2), div_scale(hyperplane_divisor(c), c.d() - 3));
}

}  // namespace detrep
