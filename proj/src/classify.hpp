#pragma once

#include <array>
#include <optional>
#include <vector>

#include "represent.hpp"

namespace detrep {

// Presentation of the degree-0 class group: independent generators with their
// exact orders, plus a base divisor of degree g-1 shifting group elements
// into the degree g-1 torsor that the matrix constructions live on.
struct MWGenerator {
  Divisor divisor;
  long order = 0;
};

struct MWPresentation {
  std::vector<MWGenerator> generators;
  Divisor base;
};

// BadPresentation unless: base degree is g-1, every generator has degree 0
// and positive order, order*D is principal, and (order/p)*D is not principal
// for any prime p dividing the order.
void verify_presentation(const PlaneCurve& c, const MWPresentation& mw);

// Linear substitution X,Y,Z -> forms; row i holds the coefficients of the
// image of variable i. Acts on polynomials by substitution and on divisors
// by preimage of the induced point map.
struct ProjSubstitution {
  std::array<std::array<Rat, 3>, 3> m;
};

ProjSubstitution identity_substitution();
ProjSubstitution compose(const ProjSubstitution& s, const ProjSubstitution& t);  // s first, then t
std::array<HomogPoly, 3> substitution_forms(const ProjSubstitution& s);

// NotAnAutomorphism unless s is invertible and fixes the curve form up to a
// constant; both parts of the result keep the degrees of the input parts.
Divisor pullback_divisor(const PlaneCurve& c, const ProjSubstitution& s, const Divisor& d);
// entrywise substitution; certification does not transport, so it is cleared
LinMatrix pullback_matrix(const ProjSubstitution& s, const LinMatrix& m);

struct ClassEntry {
  std::vector<long> label;  // exponents against the presentation generators
  Divisor divisor;          // base + sum label[i] * generator[i]
  bool effective = false;
  bool theta = false;
  std::optional<LinMatrix> matrix;  // present exactly on the non-effective classes
};

struct ClassCatalog {
  std::vector<ClassEntry> entries;
};

struct EnumerateOptions {
  int algorithm = 1;            // route for plain classes: 1 kernel, 2 adjugate
  bool symmetric_theta = true;  // symmetric construction on non-effective thetas
  int threads = 1;
};

// One entry per group element, labels in ascending odometer order with the
// first generator most significant. Verifies the presentation up front.
// Output is deterministic and independent of the thread count.
ClassCatalog enumerate_classes(const PlaneCurve& c, const MWPresentation& mw,
                               const EnumerateOptions& opt = {});

// The divisor cut on the curve by a nonvanishing row of the adjugate. Rows
// are proportional on the curve, so the class is well defined and invariant
// under constant row/column recombination of the matrix. Verifies m first.
Divisor extract_class(const PlaneCurve& c, const LinMatrix& m);

// linear equivalence of the extracted classes
bool equivalent_reps(const PlaneCurve& c, const LinMatrix& a, const LinMatrix& b);

}  // namespace detrep
