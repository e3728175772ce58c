#pragma once

#include "classify.hpp"

namespace detrep::fx {

inline const PlaneCurve& klein() {
  static PlaneCurve c = new_curve(parse_poly("X^3*Y + Y^3*Z + Z^3*X"));
  return c;
}

inline const PlaneCurve& fermat() {
  static PlaneCurve c = new_curve(parse_poly("X^4 + Y^4 - Z^4"));
  return c;
}

inline const PlaneCurve& fermat_cubic() {
  static PlaneCurve c = new_curve(parse_poly("X^3 + Y^3 + Z^3"));
  return c;
}

// Klein rational points
inline EffectiveDivisor klein_p1() { return point_divisor(klein(), {1, 0, 0}); }
inline EffectiveDivisor klein_p2() { return point_divisor(klein(), {0, 1, 0}); }
inline EffectiveDivisor klein_p3() { return point_divisor(klein(), {0, 0, 1}); }

// Fermat rational points
inline EffectiveDivisor fermat_a0() { return point_divisor(fermat(), {0, 1, 1}); }
inline EffectiveDivisor fermat_a2() { return point_divisor(fermat(), {0, -1, 1}); }
inline EffectiveDivisor fermat_b0() { return point_divisor(fermat(), {1, 0, 1}); }
inline EffectiveDivisor fermat_b2() { return point_divisor(fermat(), {-1, 0, 1}); }

// Fermat cubic rational points (all three of them)
inline EffectiveDivisor cubic_o() { return point_divisor(fermat_cubic(), {1, -1, 0}); }
inline EffectiveDivisor cubic_p() { return point_divisor(fermat_cubic(), {1, 0, -1}); }
inline EffectiveDivisor cubic_r() { return point_divisor(fermat_cubic(), {0, 1, -1}); }

// conjugate pair on the Klein quartic cut by X+Y+Z and X^2+X*Y+Y^2
inline const EffectiveDivisor& klein_q() {
  static EffectiveDivisor e = conjugate_pair_divisor(
      klein(), {parse_poly("X + Y + Z"), parse_poly("X^2 + X*Y + Y^2")});
  return e;
}

// degree-0 generator of the Klein degree-2 class group (order 14)
inline const Divisor& klein_dgen() {
  static Divisor d = div_sub(div_add(as_divisor(klein_p2()), as_divisor(klein_p3())),
                             as_divisor(klein_q()));
  return d;
}

// degree-0 generators of the Fermat class group, orders 4, 4, 2
inline const Divisor& fermat_d1() {
  static Divisor d = div_sub(as_divisor(fermat_a2()), as_divisor(fermat_b0()));
  return d;
}
inline const Divisor& fermat_d2() {
  static Divisor d = div_sub(as_divisor(fermat_b2()), as_divisor(fermat_b0()));
  return d;
}
inline const Divisor& fermat_d3() {
  static Divisor d = div_sub(div_add(as_divisor(fermat_a0()), as_divisor(fermat_b0())),
                             div_add(as_divisor(fermat_a2()), as_divisor(fermat_b2())));
  return d;
}

// base point 2*B0 shifting degree 0 to the interesting degree g-1 = 2
inline const Divisor& fermat_two_b0() {
  static Divisor d = as_divisor(effective_sum(fermat_b0(), fermat_b0()));
  return d;
}

// k-fold sums of the Klein generator, cached incrementally
inline const Divisor& klein_kd(int k) {
  static std::vector<Divisor> cache{zero_divisor(klein())};
  while (int(cache.size()) <= k) cache.push_back(div_add(cache.back(), klein_dgen()));
  return cache[std::size_t(k)];
}

inline const Divisor& klein_two_p1() {
  static Divisor d = as_divisor(effective_sum(klein_p1(), klein_p1()));
  return d;
}

// degree-2 class representative a·[generator] + 2P1
inline Divisor klein_class(int a) { return div_add(klein_kd(a), klein_two_p1()); }

// degree-2 class representative a1·[D1] + a2·[D2] + a3·[D3] + 2B0
inline Divisor fermat_class(int a1, int a2, int a3) {
  Divisor d = div_add(div_scale(fermat_d1(), a1), div_scale(fermat_d2(), a2));
  d = div_add(d, div_scale(fermat_d3(), a3));
  return div_add(d, fermat_two_b0());
}

// class group presentations backing the catalogs
inline MWPresentation klein_mw() {
  return MWPresentation{{MWGenerator{klein_dgen(), 14}}, klein_two_p1()};
}

inline MWPresentation fermat_mw() {
  return MWPresentation{{MWGenerator{fermat_d1(), 4}, MWGenerator{fermat_d2(), 4},
                         MWGenerator{fermat_d3(), 2}},
                        fermat_two_b0()};
}

inline MWPresentation cubic_mw() {
  return MWPresentation{
      {MWGenerator{div_sub(as_divisor(cubic_p()), as_divisor(cubic_o())), 3}},
      zero_divisor(fermat_cubic())};
}

// matrix of linear forms from entry strings; zero entries carried at degree 1
inline LinMatrix lin_matrix(const std::vector<std::vector<const char*>>& rows) {
  LinMatrix m;
  m.size = int(rows.size());
  for (const auto& r : rows) {
    std::vector<HomogPoly> er;
    for (const char* s : r) {
      HomogPoly p = parse_poly(s);
      er.push_back(p.is_zero() ? HomogPoly::zero(1) : p);
    }
    m.entries.push_back(std::move(er));
  }
  return m;
}

// reference representations of the two quartics
inline LinMatrix klein_m() {
  return lin_matrix({{"X", "0", "0", "Y"},
                     {"0", "Y", "0", "Z"},
                     {"0", "0", "Z", "X"},
                     {"Y", "Z", "X", "0"}});
}

inline LinMatrix klein_n() {
  return lin_matrix({{"X", "0", "Y", "Y"},
                     {"-Z", "-Y + Z", "Y - Z", "Y"},
                     {"0", "X", "-Z", "Y - Z"},
                     {"0", "Y", "X - Y", "-Z"}});
}

inline LinMatrix fermat_mat_a() {
  return lin_matrix({{"X + Z", "-Y", "0", "Y"},
                     {"-Y", "-X + Z", "0", "Y"},
                     {"0", "0", "-Y + Z", "-X"},
                     {"Y", "Y", "-X", "-Y - Z"}});
}

inline LinMatrix fermat_mat_b() {
  return lin_matrix({{"X", "-Z", "Z", "Y + Z"},
                     {"-Y", "X + Z", "0", "0"},
                     {"0", "-Y", "X - Z", "0"},
                     {"-Z", "Z", "-Y + Z", "X"}});
}

inline LinMatrix fermat_mat_c() {
  return lin_matrix({{"X + Z", "-Z", "0", "Y + Z"},
                     {"-Y", "X - Z", "0", "0"},
                     {"0", "-Y + Z", "X + Z", "-Z"},
                     {"-2*Z", "0", "-Y", "X - Z"}});
}

}  // namespace detrep::fx
