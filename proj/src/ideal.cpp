#include "ideal.hpp"

#include <algorithm>

#include "errors.hpp"
#include "linalg.hpp"

namespace detrep {

namespace {

// full normal form against G; when scale_free, intermediate results are kept
// as primitive integer polynomials (the remainder is then only defined up to
// a positive scalar, which Buchberger does not mind)
Poly reduce(Poly f, const std::vector<Poly>& g, bool scale_free) {
  std::vector<Term> rem;
  while (!f.is_zero()) {
    const Term lt = f.lead();
    const Poly* hit = nullptr;
    for (const auto& gi : g) {
      if (!gi.is_zero() && mono_divides(gi.lead().m, lt.m)) {
        hit = &gi;
        break;
      }
    }
    if (!hit) {
      rem.push_back(lt);
      f = f.tail();
      continue;
    }
    f = f.tail().axpy(-lt.c / hit->lead().c, mono_div(lt.m, hit->lead().m), hit->tail());
    if (scale_free && f.size() > 8) {
      // rescale remainder and workpiece together so the result stays a
      // scalar multiple of the true normal form
      Rat c = f.content();
      if (sgn(c) != 0 && c != 1) {
        Rat inv = Rat(1) / c;
        f = f.scaled(inv);
        for (auto& t : rem) t.c *= inv;
      }
    }
  }
  return Poly::from_terms(std::move(rem));
}

Poly spoly(const Poly& a, const Poly& b) {
  Monomial l = mono_lcm(a.lead().m, b.lead().m);
  Poly s = a.mul_term(b.lead().c, mono_div(l, a.lead().m));
  return s.axpy(-a.lead().c, mono_div(l, b.lead().m), b);
}

struct Pair {
  int i, j;
  Monomial lcm;
};

// Buchberger with the normal selection strategy and both elimination
// criteria; returns the reduced basis as primitive integer polynomials with
// positive leading coefficients, descending leading monomials.
std::vector<Poly> buchberger(std::vector<Poly> gens) {
  std::vector<Poly> g;
  for (auto& p : gens)
    if (!p.is_zero()) g.push_back(p.primitive());
  std::vector<Pair> pending;
  auto push_pairs = [&](int k) {
    for (int i = 0; i < k; ++i) pending.push_back({i, k, mono_lcm(g[i].lead().m, g[k].lead().m)});
  };
  for (int k = 1; k < int(g.size()); ++k) push_pairs(k);
  auto still_pending = [&](int a, int b) {
    for (const auto& p : pending)
      if ((p.i == a && p.j == b) || (p.i == b && p.j == a)) return true;
    return false;
  };
  while (!pending.empty()) {
    // normal strategy: smallest lcm first, ties by (i, j) for determinism
    std::size_t best = 0;
    for (std::size_t k = 1; k < pending.size(); ++k) {
      const Pair &a = pending[k], &b = pending[best];
      if (a.lcm.key() < b.lcm.key() || (a.lcm == b.lcm && (a.i < b.i || (a.i == b.i && a.j < b.j))))
        best = k;
    }
    Pair p = pending[best];
    pending.erase(pending.begin() + long(best));
    const Monomial &li = g[p.i].lead().m, &lj = g[p.j].lead().m;
    if (mono_coprime(li, lj)) continue;
    bool chained = false;
    for (int k = 0; k < int(g.size()) && !chained; ++k)
      if (k != p.i && k != p.j && mono_divides(g[k].lead().m, p.lcm) && !still_pending(p.i, k) &&
          !still_pending(p.j, k))
        chained = true;
    if (chained) continue;
    Poly r = reduce(spoly(g[p.i], g[p.j]), g, true);
    if (r.is_zero()) continue;
    g.push_back(r.primitive());
    push_pairs(int(g.size()) - 1);
  }
  // minimalize: drop elements whose lead another element's lead divides
  std::vector<int> keep;
  for (int i = 0; i < int(g.size()); ++i) {
    bool redundant = false;
    for (int j = 0; j < int(g.size()) && !redundant; ++j) {
      if (i == j) continue;
      if (mono_divides(g[j].lead().m, g[i].lead().m) &&
          (g[j].lead().m != g[i].lead().m || j < i))
        redundant = true;
    }
    if (!redundant) keep.push_back(i);
  }
  std::vector<Poly> minimal;
  for (int i : keep) minimal.push_back(g[i]);
  // inter-reduce tails
  std::vector<Poly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Poly r = reduce(minimal[i], others, true);
    reduced.push_back(r.primitive());
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const Poly& a, const Poly& b) { return a.lead().m.key() > b.lead().m.key(); });
  return reduced;
}

std::vector<Poly> to_polys(const std::vector<HomogPoly>& hs) {
  std::vector<Poly> ps;
  for (const auto& h : hs)
    if (!h.is_zero()) ps.push_back(h.poly());
  return ps;
}

HomogPoly as_homog(const Poly& p) {
  int deg = -1;
  if (!p.homogeneous_degree(&deg)) fail(Err::Internal, "inhomogeneous basis element");
  return HomogPoly(p, deg < 0 ? 0 : deg);
}

std::vector<HomogPoly> monic_homog(const std::vector<Poly>& ps) {
  std::vector<HomogPoly> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(as_homog(p.monic()));
  return out;
}

// generators of I ∩ (span), by the one-new-variable elimination
// t·I + (1−t)·J, keeping the t-free part of the basis
std::vector<Poly> intersect_polys(const std::vector<HomogPoly>& gi,
                                  const std::vector<HomogPoly>& gj) {
  Poly t = Poly::from_terms({{Monomial(0, 0, 0, 1), Rat(1)}});
  Poly one_minus_t = Poly::from_terms({{Monomial(), Rat(1)}, {Monomial(0, 0, 0, 1), Rat(-1)}});
  std::vector<Poly> gens;
  for (const auto& g : gi)
    if (!g.is_zero()) gens.push_back(t * g.poly());
  for (const auto& g : gj)
    if (!g.is_zero()) gens.push_back(one_minus_t * g.poly());
  std::vector<Poly> out;
  for (const auto& p : buchberger(std::move(gens)))
    if (!p.involves_t()) out.push_back(p);
  return out;
}

// I : (f) = (I ∩ (f)) / f
std::vector<HomogPoly> colon_single(const Ideal& i, const HomogPoly& f) {
  if (f.degree() == 0) return i.groebner();  // colon by a unit
  std::vector<HomogPoly> out;
  for (const auto& p : intersect_polys(i.groebner(), {f})) out.push_back(exact_divide(as_homog(p), f));
  return out;
}

}  // namespace

Ideal::Ideal(std::vector<HomogPoly> gens) : d_(std::make_shared<Data>()) {
  for (auto& g : gens)
    if (!g.is_zero()) d_->gens.push_back(std::move(g));
}

Ideal Ideal::unit() { return Ideal({HomogPoly::constant(Rat(1))}); }

const std::vector<HomogPoly>& Ideal::groebner() const {
  std::call_once(d_->once, [this] { d_->gb = monic_homog(buchberger(to_polys(d_->gens))); });
  return d_->gb;
}

bool Ideal::is_unit() const {
  const auto& gb = groebner();
  return gb.size() == 1 && gb[0].degree() == 0;
}

HomogPoly normal_form(const HomogPoly& p, const Ideal& i) {
  if (p.is_zero()) return p;
  Poly r = reduce(p.poly(), to_polys(i.groebner()), false);
  return HomogPoly(std::move(r), p.degree());
}

bool member(const HomogPoly& p, const Ideal& i) { return normal_form(p, i).is_zero(); }

bool ideal_contains(const Ideal& outer, const Ideal& inner) {
  for (const auto& g : inner.groebner())
    if (!member(g, outer)) return false;
  return true;
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  const auto& ga = a.groebner();
  const auto& gb = b.groebner();
  if (ga.size() != gb.size()) return false;
  for (std::size_t i = 0; i < ga.size(); ++i)
    if (ga[i] != gb[i]) return false;
  return true;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  std::vector<HomogPoly> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  std::vector<HomogPoly> gens;
  for (const auto& p : a.groebner())
    for (const auto& q : b.groebner()) gens.push_back(p * q);
  return Ideal(std::move(gens));
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  return Ideal(monic_homog(intersect_polys(a.groebner(), b.groebner())));
}

Ideal ideal_colon(const Ideal& i, const Ideal& j) {
  if (j.is_zero()) return Ideal::unit();
  bool first = true;
  Ideal acc;
  for (const auto& f : j.groebner()) {
    if (first) {
      acc = Ideal(colon_single(i, f));
      first = false;
      continue;
    }
    // when acc·f ⊆ I already, intersecting with I:(f) changes nothing
    bool covered = true;
    for (const auto& g : acc.groebner())
      if (!member(g * f, i)) {
        covered = false;
        break;
      }
    if (covered) continue;
    acc = ideal_intersect(acc, Ideal(colon_single(i, f)));
  }
  return acc;
}

Ideal saturate(const Ideal& i) {
  Ideal cur = i;
  Ideal irrelevant({HomogPoly::variable(0), HomogPoly::variable(1), HomogPoly::variable(2)});
  while (true) {
    Ideal next = ideal_colon(cur, irrelevant);
    if (ideal_equal(next, cur)) return Ideal(cur.groebner());
    cur = next;
  }
}

int graded_dim(const Ideal& i, int n) {
  if (n < 0) return 0;
  const auto& gb = i.groebner();
  int count = 0;
  for (const auto& m : monomial_basis(n)) {
    for (const auto& g : gb)
      if (mono_divides(g.lead_monomial(), m)) {
        ++count;
        break;
      }
  }
  return count;
}

int graded_dim_quotient(const Ideal& i, int n) {
  if (n < 0) return 0;
  return int(monomial_basis(n).size()) - graded_dim(i, n);
}

std::vector<HomogPoly> graded_basis(const Ideal& i, int n) {
  if (n < 0) return {};
  auto basis = monomial_basis(n);
  Mat rows;
  for (const auto& g : i.groebner()) {
    if (g.degree() > n) continue;
    for (const auto& m : monomial_basis(n - g.degree())) {
      HomogPoly mg = HomogPoly(g.poly().mul_term(Rat(1), m), n);
      rows.push_back(poly_coords(mg, basis));
    }
  }
  rref(rows);
  std::vector<HomogPoly> out;
  for (const auto& r : rows) {
    HomogPoly p = poly_from_coords(r, basis, n);
    if (!p.is_zero()) out.push_back(p);
  }
  return out;
}

int degree_of_scheme(const Ideal& i) {
  int maxdeg = 0;
  for (const auto& g : i.generators()) maxdeg = std::max(maxdeg, g.degree());
  int bound = 2 * maxdeg + 4;
  int prev = -1;
  for (int n = maxdeg;; ++n) {
    int h = graded_dim_quotient(i, n);
    if (h == prev) return h;
    if (n > bound)
      fail(Err::NotZeroDimensional, "Hilbert function does not stabilize: the scheme has positive dimension");
    prev = h;
  }
}

}  // namespace detrep
