#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace detrep {

// Monomial T^t * X^x * Y^y * Z^z. The T slot is an auxiliary variable used
// only by the elimination-order Groebner computations inside ideal.cpp; every
// monomial of a user-facing polynomial has t == 0.
//
// Total order: T-degree block first, then grevlex on (X, Y, Z) with X > Y > Z.
// Restricted to t == 0 this is plain grevlex; with the T block in front it is
// an elimination order for T. Encoded so that key comparison is the order:
// (t, x+y+z, -z, -y) compared lexicographically.
struct Monomial {
  std::uint16_t t = 0, x = 0, y = 0, z = 0;

  Monomial() = default;
  Monomial(unsigned xx, unsigned yy, unsigned zz, unsigned tt = 0)
      : t(std::uint16_t(tt)), x(std::uint16_t(xx)), y(std::uint16_t(yy)), z(std::uint16_t(zz)) {}

  unsigned degree() const { return unsigned(x) + y + z; }  // grading ignores T

  std::uint64_t key() const {
    return (std::uint64_t(t) << 48) | (std::uint64_t(degree()) << 32) |
           (std::uint64_t(0xFFFFu - z) << 16) | std::uint64_t(0xFFFFu - y);
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.t == b.t && a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.key() < b.key(); }
  friend bool operator>(const Monomial& a, const Monomial& b) { return b < a; }
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  return Monomial(a.x + b.x, a.y + b.y, a.z + b.z, a.t + b.t);
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {  // a | b
  return a.t <= b.t && a.x <= b.x && a.y <= b.y && a.z <= b.z;
}

inline Monomial mono_div(const Monomial& a, const Monomial& b) {  // a / b, caller checks
  return Monomial(a.x - b.x, a.y - b.y, a.z - b.z, a.t - b.t);
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  return Monomial(a.x > b.x ? a.x : b.x, a.y > b.y ? a.y : b.y, a.z > b.z ? a.z : b.z,
                  a.t > b.t ? a.t : b.t);
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
  return (a.t == 0 || b.t == 0) && (a.x == 0 || b.x == 0) && (a.y == 0 || b.y == 0) &&
         (a.z == 0 || b.z == 0);
}

// All monomials of total degree n with t == 0, in descending order; length (n+1)(n+2)/2.
std::vector<Monomial> monomial_basis(int n);

std::string mono_to_string(const Monomial& m);

}  // namespace detrep
