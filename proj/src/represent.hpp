#pragma once

#include <optional>

#include "rr.hpp"

namespace detrep {

// d×d matrix of linear forms; when certified, det = det_constant · F
struct LinMatrix {
  int size = 0;
  std::vector<std::vector<HomogPoly>> entries;
  std::optional<Rat> det_constant;
};

// d×d matrix of forms of one common degree (the adjugate-side object)
struct FormMatrix {
  int size = 0;
  std::vector<std::vector<HomogPoly>> entries;
};

LinMatrix transpose(const LinMatrix& m);
bool same_entries(const LinMatrix& a, const LinMatrix& b);

// det(M) = c·F with c ≠ 0, or an error naming which part failed
Rat verify_detrep(const PlaneCurve& c, const LinMatrix& m);

FormMatrix adjugate(const FormMatrix& ma);

// kernel of the multiplication map against the linear forms
LinMatrix algorithm1(const PlaneCurve& c, const Divisor& d);
// adjugate route through the dual class -D + (d-3)·H
LinMatrix algorithm2(const PlaneCurve& c, const Divisor& d);
// algorithm2 with the dual realized inside the same class; output symmetric
LinMatrix symmetric_rep(const PlaneCurve& c, const Divisor& d);

// first row rescaled so det = F exactly
LinMatrix with_monic_det(const PlaneCurve& c, const LinMatrix& m);

}  // namespace detrep
