#include "poly.hpp"

#include <algorithm>
#include <cctype>

#include "errors.hpp"

namespace detrep {

std::vector<Monomial> monomial_basis(int n) {
  // descending grevlex: among equal-degree monomials, smaller Z wins, then smaller Y
  std::vector<Monomial> out;
  if (n < 0) return out;
  out.reserve(std::size_t(n + 1) * (n + 2) / 2);
  for (int z = 0; z <= n; ++z)
    for (int y = 0; y + z <= n; ++y) out.push_back(Monomial(unsigned(n - y - z), unsigned(y), unsigned(z)));
  return out;
}

std::string mono_to_string(const Monomial& m) {
  std::string s;
  auto put = [&s](char v, unsigned e) {
    if (e == 0) return;
    if (!s.empty()) s += '*';
    s += v;
    if (e > 1) {
      s += '^';
      s += std::to_string(e);
    }
  };
  put('T', m.t);
  put('X', m.x);
  put('Y', m.y);
  put('Z', m.z);
  return s;
}

Poly Poly::from_terms(std::vector<Term> ts) {
  std::sort(ts.begin(), ts.end(),
            [](const Term& a, const Term& b) { return a.m.key() > b.m.key(); });
  Poly p;
  p.t_.reserve(ts.size());
  for (auto& t : ts) {
    if (!p.t_.empty() && p.t_.back().m == t.m)
      p.t_.back().c += t.c;
    else
      p.t_.push_back(std::move(t));
    if (!p.t_.empty() && sgn(p.t_.back().c) == 0) p.t_.pop_back();
  }
  return p;
}

Poly operator+(const Poly& a, const Poly& b) { return a.axpy(Rat(1), Monomial(), b); }

Poly operator-(const Poly& a, const Poly& b) { return a.axpy(Rat(-1), Monomial(), b); }

Poly Poly::operator-() const { return scaled(Rat(-1)); }

Poly Poly::scaled(const Rat& c) const {
  Poly r;
  if (sgn(c) == 0) return r;
  r.t_.reserve(t_.size());
  for (const auto& t : t_) r.t_.push_back({t.m, t.c * c});
  return r;
}

Poly Poly::mul_term(const Rat& c, const Monomial& m) const {
  Poly r;
  if (sgn(c) == 0) return r;
  r.t_.reserve(t_.size());
  for (const auto& t : t_) r.t_.push_back({mono_mul(t.m, m), t.c * c});
  return r;
}

Poly Poly::axpy(const Rat& c, const Monomial& m, const Poly& g) const {
  if (sgn(c) == 0) return *this;
  Poly r;
  r.t_.reserve(t_.size() + g.t_.size());
  std::size_t i = 0, j = 0;
  while (i < t_.size() || j < g.t_.size()) {
    if (j == g.t_.size()) {
      r.t_.push_back(t_[i++]);
      continue;
    }
    Monomial gm = mono_mul(g.t_[j].m, m);
    if (i == t_.size()) {
      r.t_.push_back({gm, g.t_[j].c * c});
      ++j;
    } else if (t_[i].m.key() > gm.key()) {
      r.t_.push_back(t_[i++]);
    } else if (t_[i].m.key() < gm.key()) {
      r.t_.push_back({gm, g.t_[j].c * c});
      ++j;
    } else {
      Rat s = t_[i].c + g.t_[j].c * c;
      if (sgn(s) != 0) r.t_.push_back({t_[i].m, std::move(s)});
      ++i;
      ++j;
    }
    if (!r.t_.empty() && sgn(r.t_.back().c) == 0) r.t_.pop_back();
  }
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  std::vector<Term> acc;
  acc.reserve(a.t_.size() * b.t_.size());
  for (const auto& ta : a.t_)
    for (const auto& tb : b.t_) acc.push_back({mono_mul(ta.m, tb.m), ta.c * tb.c});
  return Poly::from_terms(std::move(acc));
}

static Rat poly_content(const std::vector<Term>& ts) {
  // gcd of numerators over lcm of denominators, as a positive rational
  if (ts.empty()) return Rat(0);
  Int num_gcd = 0, den_lcm = 1;
  for (const auto& t : ts) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den().get_mpz_t());
  }
  Rat c(num_gcd, den_lcm);
  c.canonicalize();
  return c;
}

Poly Poly::primitive() const {
  if (t_.empty()) return *this;
  Rat c = poly_content(t_);
  if (sgn(lead().c) < 0) c = -c;
  Poly r;
  r.t_.reserve(t_.size());
  for (const auto& t : t_) r.t_.push_back({t.m, t.c / c});
  return r;
}

Poly Poly::monic() const {
  if (t_.empty()) return *this;
  return scaled(Rat(1) / lead().c);
}

Poly Poly::tail() const {
  Poly r;
  if (t_.size() > 1) r.t_.assign(t_.begin() + 1, t_.end());
  return r;
}

Rat Poly::content() const { return poly_content(t_); }

unsigned Poly::max_t_degree() const {
  unsigned m = 0;
  for (const auto& t : t_) m = std::max(m, unsigned(t.m.t));
  return m;
}

bool Poly::involves_t() const {
  for (const auto& t : t_)
    if (t.m.t) return true;
  return false;
}

bool Poly::homogeneous_degree(int* deg_out) const {
  if (t_.empty()) {
    *deg_out = -1;
    return true;
  }
  int d = int(t_.front().m.degree());
  for (const auto& t : t_)
    if (int(t.m.degree()) != d) return false;
  *deg_out = d;
  return true;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.t_.size() != b.t_.size()) return false;
  for (std::size_t i = 0; i < a.t_.size(); ++i)
    if (a.t_[i].m != b.t_[i].m || a.t_[i].c != b.t_[i].c) return false;
  return true;
}

HomogPoly::HomogPoly(Poly p, int degree) : p_(std::move(p)), deg_(degree) {
  for (const auto& t : p_.terms()) {
    if (t.m.t != 0) fail(Err::Internal, "homogeneous polynomial touching the elimination variable");
    if (int(t.m.degree()) != degree)
      fail(Err::Inhomogeneous, "inhomogeneous polynomial: terms of degree " +
                                   std::to_string(degree) + " and " + std::to_string(t.m.degree()));
  }
}

HomogPoly HomogPoly::variable(int var) {
  Monomial m(var == 0, var == 1, var == 2);
  return HomogPoly(Poly::from_terms({{m, Rat(1)}}), 1);
}

HomogPoly operator+(const HomogPoly& a, const HomogPoly& b) {
  if (a.deg_ != b.deg_) fail(Err::Internal, "degree mismatch in sum");
  return HomogPoly(a.p_ + b.p_, a.deg_);
}

HomogPoly operator-(const HomogPoly& a, const HomogPoly& b) {
  if (a.deg_ != b.deg_) fail(Err::Internal, "degree mismatch in difference");
  return HomogPoly(a.p_ - b.p_, a.deg_);
}

HomogPoly operator*(const HomogPoly& a, const HomogPoly& b) {
  return HomogPoly(a.p_ * b.p_, a.deg_ + b.deg_);
}

HomogPoly HomogPoly::operator-() const { return HomogPoly(-p_, deg_); }

HomogPoly HomogPoly::scaled(const Rat& c) const { return HomogPoly(p_.scaled(c), deg_); }

HomogPoly HomogPoly::pow(int e) const {
  HomogPoly r = constant(Rat(1));
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

HomogPoly HomogPoly::derivative(int var) const {
  std::vector<Term> out;
  for (const auto& t : p_.terms()) {
    unsigned e = var == 0 ? t.m.x : var == 1 ? t.m.y : t.m.z;
    if (e == 0) continue;
    Monomial m = t.m;
    if (var == 0)
      --m.x;
    else if (var == 1)
      --m.y;
    else
      --m.z;
    out.push_back({m, t.c * Rat(long(e))});
  }
  return HomogPoly(Poly::from_terms(std::move(out)), deg_ > 0 ? deg_ - 1 : 0);
}

static Rat rat_pow(const Rat& base, unsigned e) {
  Rat r(1);
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

Rat HomogPoly::eval(const Rat& x, const Rat& y, const Rat& z) const {
  Rat acc(0);
  for (const auto& t : p_.terms())
    acc += t.c * rat_pow(x, t.m.x) * rat_pow(y, t.m.y) * rat_pow(z, t.m.z);
  return acc;
}

HomogPoly HomogPoly::substituted(const std::array<HomogPoly, 3>& images) const {
  int k = images[0].degree();
  if (images[1].degree() != k || images[2].degree() != k)
    fail(Err::Internal, "substitution images of unequal degree");
  // power tables per variable
  unsigned mx = 0, my = 0, mz = 0;
  for (const auto& t : p_.terms()) {
    mx = std::max(mx, unsigned(t.m.x));
    my = std::max(my, unsigned(t.m.y));
    mz = std::max(mz, unsigned(t.m.z));
  }
  auto powers = [](const HomogPoly& f, unsigned up) {
    std::vector<HomogPoly> ps{HomogPoly::constant(Rat(1))};
    for (unsigned i = 1; i <= up; ++i) ps.push_back(ps.back() * f);
    return ps;
  };
  auto px = powers(images[0], mx), py = powers(images[1], my), pz = powers(images[2], mz);
  Poly acc;
  for (const auto& t : p_.terms()) {
    HomogPoly prod = px[t.m.x] * py[t.m.y] * pz[t.m.z];
    acc = acc + prod.poly().scaled(t.c);
  }
  return HomogPoly(std::move(acc), deg_ * k);
}

Rat HomogPoly::content() const { return poly_content(p_.terms()); }

// ---- parsing ----

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool at_end() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  [[noreturn]] void err(const std::string& what) {
    fail(Err::Syntax, "syntax error at position " + std::to_string(i) + ": " + what, long(i));
  }
  Int uint_lit() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) err("expected a number");
    return Int(s.substr(start, i - start));
  }
  unsigned exponent() {
    Int e = uint_lit();
    if (e > 1000) err("exponent too large");
    return unsigned(e.get_ui());
  }
};

}  // namespace

HomogPoly parse_poly(const std::string& text) {
  Cursor c{text};
  std::vector<Term> terms;
  int common_deg = -1;
  bool first = true;
  while (true) {
    if (c.at_end()) {
      if (first) c.err("empty polynomial");
      break;
    }
    int sign = 1;
    char p = c.peek();
    if (p == '+' || p == '-') {
      sign = p == '-' ? -1 : 1;
      ++c.i;
    } else if (!first) {
      c.err("expected '+' or '-'");
    }
    // term: [coeff '*'?] factor*
    Rat coeff(1);
    bool saw_any = false;
    p = c.peek();
    if (std::isdigit(static_cast<unsigned char>(p)) || p == '-') {
      if (p == '-') {  // coeff with its own sign, e.g. after '+'
        ++c.i;
        sign = -sign;
      }
      Int num = c.uint_lit();
      Int den = 1;
      if (c.peek() == '/') {
        ++c.i;
        den = c.uint_lit();
        if (sgn(den) == 0) c.err("zero denominator");
      }
      coeff = Rat(num, den);
      coeff.canonicalize();
      saw_any = true;
      if (c.peek() == '*') ++c.i;
    }
    Monomial mono;
    while (true) {
      p = c.peek();
      int var = p == 'X' ? 0 : p == 'Y' ? 1 : p == 'Z' ? 2 : -1;
      if (var < 0) break;
      ++c.i;
      unsigned e = 1;
      if (c.peek() == '^') {
        ++c.i;
        e = c.exponent();
      }
      if (var == 0)
        mono.x += std::uint16_t(e);
      else if (var == 1)
        mono.y += std::uint16_t(e);
      else
        mono.z += std::uint16_t(e);
      saw_any = true;
      if (c.peek() == '*') ++c.i;  // optional between factors
    }
    if (!saw_any) c.err("expected a term");
    if (common_deg < 0)
      common_deg = int(mono.degree());
    else if (int(mono.degree()) != common_deg)
      fail(Err::Inhomogeneous, "inhomogeneous polynomial: terms of degree " +
                                   std::to_string(common_deg) + " and " +
                                   std::to_string(mono.degree()));
    terms.push_back({mono, coeff * sign});
    first = false;
  }
  return HomogPoly(Poly::from_terms(std::move(terms)), common_deg < 0 ? 0 : common_deg);
}

std::string poly_to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rat a = abs(t.c);
    if (first)
      out += sgn(t.c) < 0 ? "-" : "";
    else
      out += sgn(t.c) < 0 ? " - " : " + ";
    std::string mono = mono_to_string(t.m);
    if (mono.empty())
      out += rat_to_string(a);
    else if (a == 1)
      out += mono;
    else
      out += rat_to_string(a) + "*" + mono;
    first = false;
  }
  return out;
}

std::string poly_to_string(const HomogPoly& p) { return poly_to_string(p.poly()); }

HomogPoly exact_divide(const HomogPoly& p, const HomogPoly& q) {
  if (q.is_zero()) fail(Err::NotDivisible, "division by the zero polynomial");
  Poly rem = p.poly();
  std::vector<Term> quot;
  while (!rem.is_zero()) {
    const Term& lt = rem.lead();
    const Term& lq = q.poly().lead();
    if (!mono_divides(lq.m, lt.m))
      fail(Err::NotDivisible, "polynomial division leaves a remainder");
    Rat c = lt.c / lq.c;
    Monomial m = mono_div(lt.m, lq.m);
    quot.push_back({m, c});
    rem = rem.axpy(-c, m, q.poly());
  }
  return HomogPoly(Poly::from_terms(std::move(quot)), p.degree() - q.degree());
}

std::vector<Rat> poly_coords(const HomogPoly& p, const std::vector<Monomial>& basis) {
  std::vector<Rat> v(basis.size(), Rat(0));
  std::size_t j = 0;
  for (const auto& t : p.terms()) {
    while (j < basis.size() && basis[j] != t.m) ++j;
    if (j == basis.size()) fail(Err::Internal, "monomial outside coordinate basis");
    v[j] = t.c;
  }
  return v;
}

HomogPoly poly_from_coords(const std::vector<Rat>& coords, const std::vector<Monomial>& basis,
                           int degree) {
  std::vector<Term> ts;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (sgn(coords[i]) != 0) ts.push_back({basis[i], coords[i]});
  return HomogPoly(Poly::from_terms(std::move(ts)), degree);
}

}  // namespace detrep
