#include <doctest.h>

#include <random>
#include <vector>

#include "errors.hpp"
#include "fixtures.hpp"
#include "rr.hpp"

using namespace detrep;
namespace fx = detrep::fx;

namespace {

const Divisor& kd(int k) { return fx::klein_kd(k); }
const Divisor& two_p1() { return fx::klein_two_p1(); }
Divisor klein_class(int a) { return fx::klein_class(a); }

template <class Fn>
Err thrown_code(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Err::Internal;
}

}  // namespace

TEST_SUITE("rr") {

TEST_CASE("trivial bundle carries only the constants") {
  RRSpace s = rr_space(fx::klein(), zero_divisor(fx::klein()), 0);
  CHECK(s.h0 == 1);
  REQUIRE(s.basis.size() == 1);
  CHECK(s.basis[0] == HomogPoly::constant(Rat(1)));
  CHECK(s.denominator == HomogPoly::constant(Rat(1)));
}

TEST_CASE("first twist of the trivial bundle is the linear forms") {
  RRSpace s = rr_space(fx::klein(), zero_divisor(fx::klein()), 1);
  CHECK(s.h0 == 3);
  REQUIRE(s.basis.size() == 3);
  CHECK(s.basis[0] == parse_poly("X"));
  CHECK(s.basis[1] == parse_poly("Y"));
  CHECK(s.basis[2] == parse_poly("Z"));
}

TEST_CASE("effective degree-2 classes have a one-dimensional space") {
  // 2*P1 lies on its tangent line Y = 0, so numerator and denominator agree
  RRSpace s = rr_space(fx::klein(), two_p1(), 0);
  CHECK(s.h0 == 1);
  REQUIRE(s.basis.size() == 1);
  CHECK(s.denominator == parse_poly("Y"));
  CHECK(s.basis[0] == parse_poly("Y"));

  RRSpace q = rr_space(fx::klein(), as_divisor(fx::klein_q()), 0);
  CHECK(q.h0 == 1);
  REQUIRE(q.basis.size() == 1);
  CHECK(q.denominator == parse_poly("X + Y + Z"));
  CHECK(q.basis[0] == parse_poly("X + Y + Z"));
}

TEST_CASE("canonical bundle has genus many sections") {
  RRSpace s = rr_space(fx::klein(), hyperplane_divisor(fx::klein()), 0);
  CHECK(s.h0 == 3);
  CHECK(s.denominator == parse_poly("Z"));
  REQUIRE(s.basis.size() == 3);
  CHECK(s.basis[0] == parse_poly("X"));
}

TEST_CASE("negative degree kills every section") {
  CHECK(h0(fx::klein(), div_neg(as_divisor(fx::klein_p1()))) == 0);
  CHECK(h0(fx::klein(), div_neg(as_divisor(fx::klein_q()))) == 0);
  CHECK(h0(fx::fermat(), div_neg(fx::fermat_two_b0())) == 0);
}

TEST_CASE("non-effectiveness at degree g-1") {
  CHECK(h0(fx::klein(), klein_class(2)) == 0);
  CHECK(is_noneffective(fx::klein(), klein_class(2)));
  CHECK_FALSE(is_noneffective(fx::klein(), two_p1()));
  CHECK(is_noneffective(fx::fermat(), div_add(fx::fermat_d3(), fx::fermat_two_b0())));
}

TEST_CASE("principality detects the order of the generator") {
  CHECK(is_principal(fx::klein(), zero_divisor(fx::klein())));
  CHECK_FALSE(is_principal(fx::klein(), kd(7)));
  CHECK(is_principal(fx::klein(), kd(14)));
}

TEST_CASE("linear equivalence matches the class labels") {
  Divisor p1p2 = div_add(as_divisor(fx::klein_p1()), as_divisor(fx::klein_p2()));
  CHECK(linearly_equivalent(fx::klein(), p1p2, klein_class(6)));
  Divisor p2p2 = as_divisor(effective_sum(fx::klein_p2(), fx::klein_p2()));
  CHECK_FALSE(linearly_equivalent(fx::klein(), two_p1(), p2p2));
}

TEST_CASE("theta characteristics square to the canonical class") {
  CHECK(is_theta_characteristic(fx::klein(), klein_class(2)));
  CHECK_FALSE(is_theta_characteristic(fx::klein(), klein_class(1)));
  CHECK(is_theta_characteristic(fx::klein(), as_divisor(fx::klein_q())));
  CHECK(is_theta_characteristic(fx::fermat(), div_add(fx::fermat_d3(), fx::fermat_two_b0())));
}

TEST_CASE("degree preconditions are enforced") {
  const PlaneCurve& c = fx::klein();
  Divisor p1 = as_divisor(fx::klein_p1());
  CHECK(thrown_code([&] { is_noneffective(c, p1); }) == Err::WrongDegree);
  CHECK(thrown_code([&] { is_principal(c, p1); }) == Err::WrongDegree);
  CHECK(thrown_code([&] { linearly_equivalent(c, p1, two_p1()); }) == Err::WrongDegree);
  CHECK(thrown_code([&] { is_theta_characteristic(c, p1); }) == Err::WrongDegree);
}

TEST_CASE("cubic rational points form a group of order three") {
  const PlaneCurve& c = fx::fermat_cubic();
  Divisor t = div_sub(as_divisor(fx::cubic_p()), as_divisor(fx::cubic_o()));
  CHECK_FALSE(is_principal(c, t));
  CHECK_FALSE(is_principal(c, div_scale(t, 2)));
  CHECK(is_principal(c, div_scale(t, 3)));
  CHECK(is_noneffective(c, t));
  CHECK(is_theta_characteristic(c, zero_divisor(c)));
  CHECK_FALSE(is_theta_characteristic(c, t));
}

TEST_CASE("value depends only on the formal difference class") {
  Divisor pad = div_sub(as_divisor(fx::klein_q()), as_divisor(fx::klein_q()));
  CHECK(h0(fx::klein(), div_add(two_p1(), pad)) == 1);
  CHECK(h0(fx::klein(), div_add(klein_class(2), pad)) == 0);
  Divisor fpad = div_sub(as_divisor(fx::fermat_a0()), as_divisor(fx::fermat_a0()));
  CHECK(h0(fx::fermat(), div_add(fx::fermat_two_b0(), fpad)) == 1);
}

TEST_CASE("twisting agrees with adding the hyperplane divisor") {
  const PlaneCurve& c = fx::klein();
  Divisor h = hyperplane_divisor(c);
  Divisor cases[] = {two_p1(), klein_class(2), div_neg(as_divisor(fx::klein_p1()))};
  int expected[] = {4, 4, 2};
  for (int i = 0; i < 3; ++i) {
    int twisted = rr_space(c, cases[i], 1).h0;
    CHECK(twisted == h0(c, div_add(cases[i], h)));
    CHECK(twisted == expected[i]);
  }
}

TEST_CASE("riemann-roch identity on random divisors") {
  auto run = [](const PlaneCurve& c, const std::vector<EffectiveDivisor>& base, int count,
                unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coef(-2, 2);
    Divisor k = div_scale(hyperplane_divisor(c), c.d() - 3);
    for (int t = 0; t < count; ++t) {
      Divisor d = zero_divisor(c);
      for (const auto& p : base) d = div_add(d, div_scale(as_divisor(p), coef(rng)));
      int lhs = h0(c, d) - h0(c, div_sub(k, d));
      CHECK(lhs == d.degree() - c.genus() + 1);
    }
  };
  run(fx::klein(), {fx::klein_p1(), fx::klein_p2(), fx::klein_p3(), fx::klein_q()}, 25, 20260817);
  run(fx::fermat(), {fx::fermat_a0(), fx::fermat_a2(), fx::fermat_b0(), fx::fermat_b2()}, 25,
      424242);
  run(fx::fermat_cubic(), {fx::cubic_o(), fx::cubic_p(), fx::cubic_r()}, 25, 31337);
}

TEST_CASE("degree-2 classes separate exactly by label") {
  struct Entry {
    Divisor d;
    int label;
  };
  auto pt_sum = [](const EffectiveDivisor& a, const EffectiveDivisor& b) {
    return as_divisor(effective_sum(a, b));
  };
  std::vector<Entry> list = {
      {two_p1(), 0},
      {pt_sum(fx::klein_p1(), fx::klein_p2()), 6},
      {pt_sum(fx::klein_p2(), fx::klein_p2()), 12},
      {pt_sum(fx::klein_p1(), fx::klein_p3()), 4},
      {pt_sum(fx::klein_p2(), fx::klein_p3()), 10},
      {pt_sum(fx::klein_p3(), fx::klein_p3()), 8},
      {as_divisor(fx::klein_q()), 9},
      {klein_class(6), 6},
  };
  for (size_t i = 0; i < list.size(); ++i)
    for (size_t j = i + 1; j < list.size(); ++j)
      CHECK(linearly_equivalent(fx::klein(), list[i].d, list[j].d) ==
            (list[i].label == list[j].label));
}

}  // TEST_SUITE
