#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "poly.hpp"

namespace detrep {

// Homogeneous ideal in Q[X,Y,Z] with a lazily computed reduced Groebner
// basis (grevlex, X > Y > Z). The basis is monic, ordered by descending
// leading monomial, and unique, so it doubles as a canonical form.
class Ideal {
 public:
  Ideal() : d_(std::make_shared<Data>()) {}
  explicit Ideal(std::vector<HomogPoly> gens);

  static Ideal unit();

  const std::vector<HomogPoly>& generators() const { return d_->gens; }
  // reduced Groebner basis; thread-safe single fill
  const std::vector<HomogPoly>& groebner() const;

  bool is_zero() const { return groebner().empty(); }
  bool is_unit() const;

 private:
  struct Data {
    std::vector<HomogPoly> gens;
    mutable std::once_flag once;
    std::vector<HomogPoly> gb;
  };
  std::shared_ptr<Data> d_;
};

// unique remainder against the reduced basis; zero iff p ∈ I
HomogPoly normal_form(const HomogPoly& p, const Ideal& I);
bool member(const HomogPoly& p, const Ideal& I);
bool ideal_contains(const Ideal& outer, const Ideal& inner);  // inner ⊆ outer
bool ideal_equal(const Ideal& a, const Ideal& b);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
// generated by pairwise products of the reduced bases, so the result is
// independent of how the factors were presented
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
Ideal ideal_colon(const Ideal& i, const Ideal& j);  // {p : p·J ⊆ I}
Ideal saturate(const Ideal& i);                     // I : (X,Y,Z)^∞

int graded_dim(const Ideal& i, int n);           // dim_Q of I_n
int graded_dim_quotient(const Ideal& i, int n);  // dim_Q of (S/I)_n
// canonical (reduced row echelon) basis of I_n, leading monomials strictly
// descending
std::vector<HomogPoly> graded_basis(const Ideal& i, int n);

// stable value of n ↦ dim (S/I)_n; NotZeroDimensional if it keeps growing
int degree_of_scheme(const Ideal& i);

}  // namespace detrep
