#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "monomial.hpp"
#include "rational.hpp"

namespace detrep {

struct Term {
  Monomial m;
  Rat c;
};

// Sparse polynomial: terms sorted in strictly descending monomial order, no
// zero coefficients. May involve the auxiliary T variable and need not be
// homogeneous; this is the working type of the Groebner engine. User-facing
// homogeneous polynomials are the HomogPoly wrapper below.
class Poly {
public:
  Poly() = default;
  static Poly from_terms(std::vector<Term> ts);  // sorts, combines, prunes zeros

  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  const Term& lead() const { return t_.front(); }
  std::size_t size() const { return t_.size(); }

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;

  Poly scaled(const Rat& c) const;
  Poly mul_term(const Rat& c, const Monomial& m) const;

  // this + c * (m * g); the reduction step of the Groebner engine
  Poly axpy(const Rat& c, const Monomial& m, const Poly& g) const;

  // divide by content so coefficients are coprime integers, leading one positive
  Poly primitive() const;
  Poly monic() const;
  Poly tail() const;  // all terms but the lead
  Rat content() const;

  unsigned max_t_degree() const;
  bool involves_t() const;
  // degree in (X,Y,Z) of every term equal? returns common degree via out-param
  bool homogeneous_degree(int* deg_out) const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
  std::vector<Term> t_;
};

// Homogeneous polynomial in X, Y, Z of a declared degree. The zero polynomial
// is representable at any degree (empty term list) so graded maps stay typed.
class HomogPoly {
public:
  explicit HomogPoly(int degree = 0) : deg_(degree) {}
  HomogPoly(Poly p, int degree);  // checks homogeneity of that degree, t == 0

  static HomogPoly zero(int degree) { return HomogPoly(degree); }
  static HomogPoly constant(const Rat& c) {
    return HomogPoly(Poly::from_terms({{Monomial(), c}}), 0);
  }
  static HomogPoly variable(int var);  // 0 -> X, 1 -> Y, 2 -> Z

  int degree() const { return deg_; }
  bool is_zero() const { return p_.is_zero(); }
  const Poly& poly() const { return p_; }
  const std::vector<Term>& terms() const { return p_.terms(); }
  const Monomial& lead_monomial() const { return p_.lead().m; }
  const Rat& lead_coeff() const { return p_.lead().c; }

  friend HomogPoly operator+(const HomogPoly& a, const HomogPoly& b);
  friend HomogPoly operator-(const HomogPoly& a, const HomogPoly& b);
  friend HomogPoly operator*(const HomogPoly& a, const HomogPoly& b);
  HomogPoly operator-() const;
  HomogPoly scaled(const Rat& c) const;
  HomogPoly pow(int e) const;  // e >= 0

  // the zero form belongs to every graded piece, so it ignores declared degree
  friend bool operator==(const HomogPoly& a, const HomogPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.deg_ == b.deg_ && a.p_ == b.p_;
  }
  friend bool operator!=(const HomogPoly& a, const HomogPoly& b) { return !(a == b); }

  HomogPoly derivative(int var) const;          // d/dX, d/dY, d/dZ
  Rat eval(const Rat& x, const Rat& y, const Rat& z) const;
  // substitute each variable by a form; all images of equal degree k >= 1
  HomogPoly substituted(const std::array<HomogPoly, 3>& images) const;

  // content: positive rational c with this/c integer-coefficient primitive; 0 for zero poly
  Rat content() const;
  HomogPoly primitive() const { return HomogPoly(p_.primitive(), deg_); }

private:
  Poly p_;
  int deg_;
};

HomogPoly parse_poly(const std::string& text);
std::string poly_to_string(const HomogPoly& p);
std::string poly_to_string(const Poly& p);

// exact division p / q; NotDivisible on nonzero remainder, q != 0 required
HomogPoly exact_divide(const HomogPoly& p, const HomogPoly& q);

// coordinates of p over the descending-monomial basis of its degree
std::vector<Rat> poly_coords(const HomogPoly& p, const std::vector<Monomial>& basis);
HomogPoly poly_from_coords(const std::vector<Rat>& coords, const std::vector<Monomial>& basis,
                           int degree);

}  // namespace detrep
