#include "classify.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>

namespace detrep {
namespace {

Rat det3(const std::array<std::array<Rat, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// preimage of an effective part: substituted generators, resaturated on the curve
EffectiveDivisor pull_part(const PlaneCurve& c, const std::array<HomogPoly, 3>& forms,
                           const EffectiveDivisor& e) {
  std::vector<HomogPoly> gens;
  gens.reserve(e.ideal().generators().size());
  for (const HomogPoly& g : e.ideal().generators()) gens.push_back(g.substituted(forms));
  EffectiveDivisor out = make_effective(c, Ideal(std::move(gens)));
  if (out.degree() != e.degree()) fail(Err::Internal, "pullback changed a divisor degree");
  return out;
}

}  // namespace

void verify_presentation(const PlaneCurve& c, const MWPresentation& mw) {
  if (mw.base.degree() != c.genus() - 1)
    fail(Err::BadPresentation, "base divisor must have degree genus-1");
  for (const MWGenerator& g : mw.generators) {
    if (g.divisor.degree() != 0) fail(Err::BadPresentation, "generators must have degree 0");
    if (g.order <= 0) fail(Err::BadPresentation, "generator orders must be positive");
    if (!is_principal(c, div_scale(g.divisor, g.order)))
      fail(Err::BadPresentation, "order times generator is not principal");
    long n = g.order;
    for (long p = 2; n > 1; ++p) {
      if (n % p != 0) continue;
      if (is_principal(c, div_scale(g.divisor, g.order / p)))
        fail(Err::BadPresentation, "generator order is not minimal");
      while (n % p == 0) n /= p;
    }
  }
}

ProjSubstitution identity_substitution() {
  ProjSubstitution s{};
  for (int i = 0; i < 3; ++i) s.m[i][i] = 1;
  return s;
}

ProjSubstitution compose(const ProjSubstitution& s, const ProjSubstitution& t) {
  ProjSubstitution out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out.m[i][j] += s.m[i][k] * t.m[k][j];
  return out;
}

std::array<HomogPoly, 3> substitution_forms(const ProjSubstitution& s) {
  std::array<HomogPoly, 3> out{HomogPoly::zero(1), HomogPoly::zero(1), HomogPoly::zero(1)};
  for (int i = 0; i < 3; ++i) {
    HomogPoly f = HomogPoly::zero(1);
    for (int j = 0; j < 3; ++j)
      if (s.m[i][j] != 0) f = f + HomogPoly::variable(j).scaled(s.m[i][j]);
    out[i] = f;
  }
  return out;
}

Divisor pullback_divisor(const PlaneCurve& c, const ProjSubstitution& s, const Divisor& d) {
  if (det3(s.m) == 0) fail(Err::NotAnAutomorphism, "substitution is not invertible");
  std::array<HomogPoly, 3> forms = substitution_forms(s);
  HomogPoly fs = c.f().substituted(forms);
  if (fs.is_zero() || fs.primitive() != c.f())
    fail(Err::NotAnAutomorphism, "substitution does not preserve the curve");
  return Divisor(pull_part(c, forms, d.plus()), pull_part(c, forms, d.minus()));
}

LinMatrix pullback_matrix(const ProjSubstitution& s, const LinMatrix& m) {
  std::array<HomogPoly, 3> forms = substitution_forms(s);
  LinMatrix out;
  out.size = m.size;
  out.entries.reserve(m.entries.size());
  for (const std::vector<HomogPoly>& row : m.entries) {
    std::vector<HomogPoly> r;
    r.reserve(row.size());
    for (const HomogPoly& e : row)
      r.push_back(e.is_zero() ? HomogPoly::zero(1) : e.substituted(forms));
    out.entries.push_back(std::move(r));
  }
  return out;
}

ClassCatalog enumerate_classes(const PlaneCurve& c, const MWPresentation& mw,
                               const EnumerateOptions& opt) {
  verify_presentation(c, mw);
  const std::size_t ng = mw.generators.size();

  // multiples of each generator, then all class divisors, built sequentially
  // so the shared Groebner caches fill before the pool starts
  std::vector<std::vector<Divisor>> mult(ng);
  long total = 1;
  for (std::size_t i = 0; i < ng; ++i) {
    long ord = mw.generators[i].order;
    total *= ord;
    mult[i].reserve(std::size_t(ord));
    mult[i].push_back(zero_divisor(c));
    for (long k = 1; k < ord; ++k)
      mult[i].push_back(div_add(mult[i].back(), mw.generators[i].divisor));
  }
  std::vector<std::vector<long>> labels;
  labels.reserve(std::size_t(total));
  std::vector<Divisor> divisors;
  divisors.reserve(std::size_t(total));
  std::vector<long> a(ng, 0);
  for (long idx = 0; idx < total; ++idx) {
    Divisor dv = mw.base;
    for (std::size_t i = 0; i < ng; ++i)
      if (a[i] != 0) dv = div_add(dv, mult[i][std::size_t(a[i])]);
    labels.push_back(a);
    divisors.push_back(std::move(dv));
    for (std::size_t i = ng; i-- > 0;) {  // last generator fastest
      if (++a[i] < mw.generators[i].order) break;
      a[i] = 0;
    }
  }

  std::vector<std::optional<ClassEntry>> slots(static_cast<std::size_t>(total));
  std::atomic<long> next{0};
  std::exception_ptr first_error;
  std::mutex error_mu;
  auto work = [&]() {
    for (;;) {
      long idx = next.fetch_add(1);
      if (idx >= total) return;
      try {
        const Divisor& dv = divisors[std::size_t(idx)];
        bool eff = h0(c, dv) > 0;
        bool th = is_theta_characteristic(c, dv);
        std::optional<LinMatrix> m;
        if (!eff) {
          if (th && opt.symmetric_theta)
            m = symmetric_rep(c, dv);
          else if (opt.algorithm == 2)
            m = algorithm2(c, dv);
          else
            m = algorithm1(c, dv);
        }
        slots[std::size_t(idx)] = ClassEntry{labels[std::size_t(idx)], dv, eff, th, std::move(m)};
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  int nthreads = opt.threads < 1 ? 1 : opt.threads;
  if (long(nthreads) > total) nthreads = int(total);
  if (nthreads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(std::size_t(nthreads));
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  ClassCatalog cat;
  cat.entries.reserve(std::size_t(total));
  for (std::optional<ClassEntry>& s : slots) cat.entries.push_back(std::move(*s));
  return cat;
}

Divisor extract_class(const PlaneCurve& c, const LinMatrix& m) {
  verify_detrep(c, m);
  FormMatrix fm;
  fm.size = m.size;
  fm.entries = m.entries;
  for (std::vector<HomogPoly>& row : fm.entries)
    for (HomogPoly& e : row)
      if (e.is_zero()) e = HomogPoly::zero(1);
  FormMatrix adj = adjugate(fm);
  for (int i = 0; i < adj.size; ++i) {
    std::vector<HomogPoly> gens;
    for (const HomogPoly& e : adj.entries[std::size_t(i)])
      if (!e.is_zero() && !member(e, c.curve_ideal())) gens.push_back(e);
    if (gens.empty()) continue;
    return as_divisor(make_effective(c, Ideal(std::move(gens))));
  }
  fail(Err::DegenerateAdjugate, "adjugate vanishes on the curve");
}

bool equivalent_reps(const PlaneCurve& c, const LinMatrix& a, const LinMatrix& b) {
  return linearly_equivalent(c, extract_class(c, a), extract_class(c, b));
}

}  // namespace detrep
