#include <doctest.h>

#include <functional>
#include <random>

#include "errors.hpp"
#include "poly.hpp"

using namespace detrep;

namespace {

HomogPoly klein() { return parse_poly("X^3*Y + Y^3*Z + Z^3*X"); }
HomogPoly fermat() { return parse_poly("X^4 + Y^4 - Z^4"); }

Err code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Err::Internal;
}

}  // namespace

TEST_SUITE("poly") {

TEST_CASE("monomial order is grevlex with X > Y > Z") {
  auto b2 = monomial_basis(2);
  REQUIRE(b2.size() == 6);
  CHECK(mono_to_string(b2[0]) == "X^2");
  CHECK(mono_to_string(b2[1]) == "X*Y");
  CHECK(mono_to_string(b2[2]) == "Y^2");
  CHECK(mono_to_string(b2[3]) == "X*Z");
  CHECK(mono_to_string(b2[4]) == "Y*Z");
  CHECK(mono_to_string(b2[5]) == "Z^2");
  for (std::size_t i = 0; i + 1 < b2.size(); ++i) CHECK(b2[i] > b2[i + 1]);
  CHECK(monomial_basis(0).size() == 1);
  CHECK(monomial_basis(1).size() == 3);
  CHECK(monomial_basis(6).size() == 28);
}

TEST_CASE("monomial order is total, multiplicative, and degree-first") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<unsigned> e(0, 5);
  for (int it = 0; it < 200; ++it) {
    Monomial a(e(rng), e(rng), e(rng)), b(e(rng), e(rng), e(rng)), c(e(rng), e(rng), e(rng));
    CHECK(((a < b) + (b < a) + (a == b)) == 1);
    if (a < b) {
      CHECK(mono_mul(a, c) < mono_mul(b, c));
      if (a.degree() != b.degree()) CHECK(a.degree() < b.degree());
    }
    CHECK(mono_divides(a, mono_mul(a, b)));
    CHECK(mono_div(mono_mul(a, b), b) == a);
    Monomial l = mono_lcm(a, b);
    CHECK(mono_divides(a, l));
    CHECK(mono_divides(b, l));
  }
}

TEST_CASE("elimination variable dominates the block order") {
  Monomial t_only(0, 0, 0, 1);
  Monomial big_xyz(9, 9, 9, 0);
  CHECK(t_only > big_xyz);
  bool with_t = Monomial(1, 0, 0, 1) > Monomial(0, 1, 0, 1);
  bool without_t = Monomial(1, 0, 0) > Monomial(0, 1, 0);
  CHECK(with_t == without_t);
}

TEST_CASE("parse accepts the documented grammar") {
  HomogPoly f = klein();
  CHECK(f.degree() == 4);
  CHECK(f.terms().size() == 3);
  CHECK(poly_to_string(f) == "X^3*Y + Y^3*Z + X*Z^3");
  CHECK(poly_to_string(parse_poly("  - X  +2Y - 3/4 * Z ")) == "-X + 2*Y - 3/4*Z");
  CHECK(parse_poly("XY") == parse_poly("X*Y"));
  CHECK(parse_poly("X^2Y") == parse_poly("Y*X*X"));
  CHECK(parse_poly("5") == HomogPoly::constant(Rat(5)));
  CHECK(parse_poly("X + Y - X") == parse_poly("Y"));
  HomogPoly zero = parse_poly("X - X");
  CHECK(zero.is_zero());
  CHECK(zero.degree() == 1);
  CHECK(poly_to_string(zero) == "0");
}

TEST_CASE("parse rejects malformed input with positions") {
  auto pos_of = [](const std::string& s) {
    try {
      parse_poly(s);
    } catch (const Error& e) {
      REQUIRE(e.code() == Err::Syntax);
      return e.payload();
    }
    return long(-1);
  };
  CHECK(pos_of("") == 0);
  CHECK(pos_of("X^") == 2);
  CHECK(pos_of("X + + Y") == 4);
  CHECK(pos_of("X Q") == 2);
  CHECK(pos_of("1/0") >= 0);
  CHECK(code_of([] { parse_poly("X^2 + Y"); }) == Err::Inhomogeneous);
  try {
    parse_poly("X^2 + Y");
  } catch (const Error& e) {
    std::string msg = e.what();
    CHECK(msg.find("2") != std::string::npos);
    CHECK(msg.find("1") != std::string::npos);
  }
}

TEST_CASE("print then parse is the identity on random polynomials") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> cd(-99, 99);
  std::uniform_int_distribution<int> deg(0, 6);
  for (int it = 0; it < 100; ++it) {
    int n = deg(rng);
    auto basis = monomial_basis(n);
    std::vector<Term> ts;
    for (const auto& m : basis) {
      int c = cd(rng);
      if (c && rng() % 3 == 0) {
        Rat r(c, 1 + int(rng() % 9));
        r.canonicalize();
        ts.push_back({m, r});
      }
    }
    HomogPoly p(Poly::from_terms(std::move(ts)), n);
    CHECK(parse_poly(poly_to_string(p)) == p);
  }
}

TEST_CASE("ring axioms hold on random polynomials") {
  std::mt19937 rng(13);
  auto rand_poly = [&rng](int n) {
    std::uniform_int_distribution<int> cd(-9, 9);
    std::vector<Term> ts;
    for (const auto& m : monomial_basis(n)) {
      int c = cd(rng);
      if (c) ts.push_back({m, Rat(c)});
    }
    return HomogPoly(Poly::from_terms(std::move(ts)), n);
  };
  for (int it = 0; it < 25; ++it) {
    HomogPoly a = rand_poly(2), b = rand_poly(2), c = rand_poly(3);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a + (-a) == HomogPoly::zero(2));
  }
}

TEST_CASE("derivative and evaluation") {
  HomogPoly f = klein();
  CHECK(f.derivative(0) == parse_poly("3X^2Y + Z^3"));
  CHECK(f.derivative(1) == parse_poly("X^3 + 3Y^2Z"));
  CHECK(f.derivative(2) == parse_poly("Y^3 + 3Z^2X"));
  CHECK(f.eval(Rat(1), Rat(1), Rat(1)) == Rat(3));
  CHECK(f.eval(Rat(0), Rat(0), Rat(1)) == Rat(0));
  CHECK(fermat().eval(Rat(1), Rat(0), Rat(1)) == Rat(0));
  CHECK(fermat().eval(Rat(3), Rat(0), Rat(5)) == Rat(81 - 625));
}

TEST_CASE("substitution respects curve symmetries") {
  std::array<HomogPoly, 3> cycle = {HomogPoly::variable(2), HomogPoly::variable(0),
                                    HomogPoly::variable(1)};
  CHECK(klein().substituted(cycle) == klein());
  std::array<HomogPoly, 3> negx = {-HomogPoly::variable(0), HomogPoly::variable(1),
                                   HomogPoly::variable(2)};
  CHECK(fermat().substituted(negx) == fermat());
  std::array<HomogPoly, 3> sq = {HomogPoly::variable(0) * HomogPoly::variable(0),
                                 HomogPoly::variable(1) * HomogPoly::variable(1),
                                 HomogPoly::variable(2) * HomogPoly::variable(2)};
  CHECK(parse_poly("X + Y").substituted(sq) == parse_poly("X^2 + Y^2"));
}

TEST_CASE("exact division") {
  HomogPoly p = parse_poly("X^2 - Y^2");
  CHECK(exact_divide(p, parse_poly("X - Y")) == parse_poly("X + Y"));
  CHECK(exact_divide(p, parse_poly("X + Y")) == parse_poly("X - Y"));
  CHECK(code_of([&] { exact_divide(parse_poly("X^2 + Y^2"), parse_poly("X - Y")); }) ==
        Err::NotDivisible);
  HomogPoly f = fermat();
  CHECK(exact_divide(f * f * klein(), f * f) == klein());
}

TEST_CASE("content and primitive normalisation") {
  HomogPoly p = parse_poly("2/3*X + 4/3*Y");
  CHECK(p.content() == Rat(2, 3));
  CHECK(HomogPoly(p.poly().primitive(), 1) == parse_poly("X + 2Y"));
  HomogPoly q = parse_poly("-2X - 4Y");
  CHECK(HomogPoly(q.poly().primitive(), 1) == parse_poly("X + 2Y"));
  CHECK(HomogPoly::zero(3).content() == Rat(0));
}

TEST_CASE("coordinates against a monomial basis") {
  auto basis = monomial_basis(4);
  HomogPoly f = klein();
  auto v = poly_coords(f, basis);
  REQUIRE(v.size() == 15);
  CHECK(poly_from_coords(v, basis, 4) == f);
  int nonzero = 0;
  for (const auto& c : v) nonzero += sgn(c) != 0;
  CHECK(nonzero == 3);
}

}  // TEST_SUITE
