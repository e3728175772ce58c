#include "represent.hpp"

#include <bit>

#include "errors.hpp"
#include "linalg.hpp"

namespace detrep {

namespace {

HomogPoly mono_poly(const Monomial& m, int deg) {
  return HomogPoly(Poly::from_terms({{m, Rat(1)}}), deg);
}

// determinant by expansion along the last row of each column subset;
// all entries share one declared degree so the slices stay homogeneous
HomogPoly det_of(const std::vector<std::vector<HomogPoly>>& a, int entry_deg) {
  int n = int(a.size());
  std::vector<HomogPoly> dp;
  dp.reserve(std::size_t(1) << n);
  dp.push_back(HomogPoly::constant(Rat(1)));
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    int k = std::popcount(mask) - 1;
    HomogPoly acc = HomogPoly::zero((k + 1) * entry_deg);
    int sign = k % 2 == 0 ? 1 : -1;
    for (int col = 0; col < n; ++col) {
      if (!(mask >> col & 1)) continue;
      HomogPoly t = a[std::size_t(k)][std::size_t(col)] * dp[mask ^ (1u << col)];
      acc = sign > 0 ? acc + t : acc - t;
      sign = -sign;
    }
    dp.push_back(std::move(acc));
  }
  return dp.back();
}

// global rescale making the first nonzero entry primitive with positive lead
void normalize_entries(LinMatrix& m) {
  for (const auto& row : m.entries)
    for (const auto& e : row) {
      if (e.is_zero()) continue;
      Rat lam = e.primitive().lead_coeff() / e.lead_coeff();
      if (lam != 1)
        for (auto& r2 : m.entries)
          for (auto& e2 : r2) e2 = e2.scaled(lam);
      return;
    }
}

void check_class_degree(const PlaneCurve& c, const Divisor& d) {
  if (d.degree() != c.genus() - 1)
    fail(Err::WrongDegree, "representations correspond to degree g-1 classes");
}

void check_noneffective(const RRCore& core) {
  int h = core.h0(0);
  if (h != 0) fail(Err::EffectiveDivisor, "divisor class is effective", h);
}

// shared tail of the adjugate route: sections v of L(1) over G0v and w of
// L'(1) over G0w with L⊗L' the twist d-3; solves for the degree-(d-1) forms
// P with num_v·num_w·l^(d-3) = P·G0v·G0w + Q·F, assembles (P), and divides
// the adjugate by F^(d-2)
LinMatrix adjugate_route(const PlaneCurve& c, const std::vector<HomogPoly>& vnum,
                         const HomogPoly& g0v, const std::vector<HomogPoly>& wnum,
                         const HomogPoly& g0w) {
  const int dd = c.d();
  if (int(vnum.size()) != dd || int(wnum.size()) != dd)
    fail(Err::InternalRankError, "twisted section spaces have wrong dimension");
  HomogPoly denom = g0v * g0w;
  HomogPoly ellpow = c.hyperplane_form().pow(dd - 3);
  const int big = denom.degree() + dd - 1;
  auto monos_big = monomial_basis(big);
  auto monos_p = monomial_basis(dd - 1);
  auto monos_q = monomial_basis(big - dd);
  const std::size_t mp = monos_p.size(), mq = monos_q.size();
  Mat a(monos_big.size(), Vec(mp + mq, Rat(0)));
  for (std::size_t k = 0; k < mp; ++k) {
    Vec col = poly_coords(denom * mono_poly(monos_p[k], dd - 1), monos_big);
    for (std::size_t r = 0; r < col.size(); ++r) a[r][k] = std::move(col[r]);
  }
  for (std::size_t k = 0; k < mq; ++k) {
    Vec col = poly_coords(c.f() * mono_poly(monos_q[k], big - dd), monos_big);
    for (std::size_t r = 0; r < col.size(); ++r) a[r][mp + k] = std::move(col[r]);
  }
  Mat b(monos_big.size(), Vec(std::size_t(dd) * dd, Rat(0)));
  for (int i = 0; i < dd; ++i)
    for (int j = 0; j < dd; ++j) {
      Vec col = poly_coords(vnum[i] * wnum[j] * ellpow, monos_big);
      for (std::size_t r = 0; r < col.size(); ++r)
        b[r][std::size_t(i) * dd + j] = std::move(col[r]);
    }
  Mat x = solve_columns(a, b);
  FormMatrix ma;
  ma.size = dd;
  for (int i = 0; i < dd; ++i) {
    std::vector<HomogPoly> row;
    for (int j = 0; j < dd; ++j) {
      Vec coeff(mp);
      for (std::size_t k = 0; k < mp; ++k) coeff[k] = x[k][std::size_t(i) * dd + j];
      row.push_back(poly_from_coords(coeff, monos_p, dd - 1));
    }
    ma.entries.push_back(std::move(row));
  }
  FormMatrix adj = adjugate(ma);
  HomogPoly fpow = c.f().pow(dd - 2);
  LinMatrix m;
  m.size = dd;
  for (int i = 0; i < dd; ++i) {
    std::vector<HomogPoly> row;
    for (int j = 0; j < dd; ++j) {
      try {
        row.push_back(exact_divide(adj.entries[i][j], fpow));
      } catch (const Error& e) {
        if (e.code() != Err::NotDivisible) throw;
        fail(Err::DivisionFailure, "adjugate entry not divisible by the curve power");
      }
    }
    m.entries.push_back(std::move(row));
  }
  normalize_entries(m);
  m.det_constant = verify_detrep(c, m);
  return m;
}

}  // namespace

LinMatrix transpose(const LinMatrix& m) {
  LinMatrix t;
  t.size = m.size;
  t.det_constant = m.det_constant;
  t.entries.assign(std::size_t(m.size), {});
  for (int j = 0; j < m.size; ++j) {
    t.entries[std::size_t(j)].reserve(std::size_t(m.size));
    for (int i = 0; i < m.size; ++i)
      t.entries[std::size_t(j)].push_back(m.entries[std::size_t(i)][std::size_t(j)]);
  }
  return t;
}

bool same_entries(const LinMatrix& a, const LinMatrix& b) {
  if (a.size != b.size) return false;
  for (int i = 0; i < a.size; ++i)
    for (int j = 0; j < a.size; ++j)
      if (!(a.entries[std::size_t(i)][std::size_t(j)] == b.entries[std::size_t(i)][std::size_t(j)]))
        return false;
  return true;
}

Rat verify_detrep(const PlaneCurve& c, const LinMatrix& m) {
  if (m.size <= 0 || int(m.entries.size()) != m.size)
    fail(Err::Internal, "matrix is not square");
  auto a = m.entries;
  for (auto& row : a) {
    if (int(row.size()) != m.size) fail(Err::Internal, "matrix is not square");
    for (auto& e : row) {
      if (e.is_zero())
        e = HomogPoly::zero(1);
      else if (e.degree() != 1)
        fail(Err::Internal, "matrix entries must be linear forms");
    }
  }
  HomogPoly det = det_of(a, 1);
  if (det.is_zero()) fail(Err::ZeroDeterminant, "determinant vanishes identically");
  const HomogPoly& f = c.f();
  if (det.degree() != f.degree() || !(det.lead_monomial() == f.lead_monomial()))
    fail(Err::NotProportional, "determinant is not a rational multiple of the curve form");
  Rat cc = det.lead_coeff() / f.lead_coeff();
  if (!(det == f.scaled(cc)))
    fail(Err::NotProportional, "determinant is not a rational multiple of the curve form");
  return cc;
}

FormMatrix adjugate(const FormMatrix& ma) {
  const int n = ma.size;
  if (n <= 0 || int(ma.entries.size()) != n) fail(Err::Internal, "matrix is not square");
  int e = ma.entries[0][0].degree();
  for (const auto& row : ma.entries) {
    if (int(row.size()) != n) fail(Err::Internal, "matrix is not square");
    for (const auto& p : row)
      if (p.degree() != e) fail(Err::Internal, "matrix entries must share one degree");
  }
  FormMatrix adj;
  adj.size = n;
  adj.entries.assign(std::size_t(n), std::vector<HomogPoly>(std::size_t(n), HomogPoly::zero((n - 1) * e)));
  if (n == 1) {
    adj.entries[0][0] = HomogPoly::constant(Rat(1));
    return adj;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<std::vector<HomogPoly>> minor;
      minor.reserve(std::size_t(n) - 1);
      for (int r = 0; r < n; ++r) {
        if (r == i) continue;
        std::vector<HomogPoly> row;
        row.reserve(std::size_t(n) - 1);
        for (int s = 0; s < n; ++s)
          if (s != j) row.push_back(ma.entries[std::size_t(r)][std::size_t(s)]);
        minor.push_back(std::move(row));
      }
      HomogPoly cf = det_of(minor, e);
      adj.entries[std::size_t(j)][std::size_t(i)] = (i + j) % 2 == 0 ? cf : -cf;
    }
  return adj;
}

LinMatrix algorithm1(const PlaneCurve& c, const Divisor& d) {
  check_class_degree(c, d);
  RRCore core(c, d);
  check_noneffective(core);
  const int dd = c.d();
  std::vector<HomogPoly> v = core.basis(1);
  if (int(v.size()) != dd)
    fail(Err::InternalRankError, "first-twist section space has wrong dimension");
  if (core.h0(2) != 2 * dd)
    fail(Err::InternalRankError, "second-twist section space has wrong dimension");
  // relations: combinations of num_j·{X,Y,Z} vanishing on the curve
  auto monos = monomial_basis(core.n() + 2);
  Mat rows(monos.size(), Vec(std::size_t(3) * dd, Rat(0)));
  for (int j = 0; j < dd; ++j)
    for (int var = 0; var < 3; ++var) {
      HomogPoly prod = normal_form(v[std::size_t(j)] * HomogPoly::variable(var), c.curve_ideal());
      Vec col = poly_coords(prod, monos);
      for (std::size_t r = 0; r < col.size(); ++r)
        rows[r][std::size_t(3) * j + var] = std::move(col[r]);
    }
  Mat ker = kernel_basis(std::move(rows), 3 * dd);
  if (int(ker.size()) != dd) fail(Err::InternalRankError, "relation space has wrong dimension");
  auto lin = monomial_basis(1);
  LinMatrix m;
  m.size = dd;
  for (int i = 0; i < dd; ++i) {
    std::vector<HomogPoly> row;
    for (int j = 0; j < dd; ++j) {
      Vec coeff{ker[std::size_t(i)][std::size_t(3) * j], ker[std::size_t(i)][std::size_t(3) * j + 1],
                ker[std::size_t(i)][std::size_t(3) * j + 2]};
      row.push_back(poly_from_coords(coeff, lin, 1));
    }
    m.entries.push_back(std::move(row));
  }
  normalize_entries(m);
  m.det_constant = verify_detrep(c, m);
  return m;
}

LinMatrix algorithm2(const PlaneCurve& c, const Divisor& d) {
  check_class_degree(c, d);
  RRCore vcore(c, d);
  check_noneffective(vcore);
  Divisor dual = div_add(div_neg(d), div_scale(hyperplane_divisor(c), c.d() - 3));
  RRCore wcore(c, dual);
  return adjugate_route(c, vcore.basis(1), vcore.g0(), wcore.basis(1), wcore.g0());
}

LinMatrix symmetric_rep(const PlaneCurve& c, const Divisor& d) {
  check_class_degree(c, d);
  RRCore core(c, d);
  check_noneffective(core);
  // a theta characteristic makes -2D + (d-3)·H trivial, giving the one
  // section h that realizes the dual inside the class itself
  Divisor twice_dual =
      div_add(div_neg(div_scale(d, 2)), div_scale(hyperplane_divisor(c), c.d() - 3));
  RRSpace iso = rr_space(c, twice_dual, 0);
  if (iso.h0 != 1) fail(Err::NotThetaCharacteristic, "class is not a theta characteristic");
  std::vector<HomogPoly> v = core.basis(1);
  std::vector<HomogPoly> w;
  w.reserve(v.size());
  for (const auto& vi : v) w.push_back(vi * iso.basis[0]);
  return adjugate_route(c, v, core.g0(), w, core.g0() * iso.denominator);
}

LinMatrix with_monic_det(const PlaneCurve& c, const LinMatrix& m) {
  Rat cc = m.det_constant ? *m.det_constant : verify_detrep(c, m);
  LinMatrix out = m;
  for (auto& e : out.entries[0]) e = e.scaled(Rat(1) / cc);
  out.det_constant = Rat(1);
  return out;
}

}  // namespace detrep
