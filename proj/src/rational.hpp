#pragma once

#include <gmpxx.h>

#include <string>

#include "errors.hpp"

namespace detrep {

// Exact rational scalar. mpq_class canonical form is lowest terms with
// positive denominator, which is exactly the representation contract.
using Rat = mpq_class;
using Int = mpz_class;

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

// Accepts "p" or "p/q" with an optional leading sign on p; q > 0.
inline Rat rat_from_string(const std::string& s, long err_pos = 0) {
  if (s.empty()) fail(Err::Syntax, "empty rational literal", err_pos);
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    fail(Err::Syntax, "bad rational literal '" + s + "'", err_pos);
  if (sgn(Rat(r.get_den())) <= 0)
    fail(Err::Syntax, "rational literal needs positive denominator: '" + s + "'", err_pos);
  r.canonicalize();
  return r;
}

}  // namespace detrep
