#pragma once

#include <map>
#include <optional>
#include <string>

#include "classify.hpp"

namespace detrep {

// Parsed curve description: the curve itself, every named divisor (points,
// conjugate pairs and integer combinations all land in one namespace), and
// the optional class group presentation.
struct CurveFileData {
  PlaneCurve curve;
  std::map<std::string, Divisor> divisors;
  std::optional<MWPresentation> mw;
};

// Sectioned text format: [curve] f = <poly>; [points] NAME = (a, b, c);
// [pairs] NAME = <poly>; <poly>; ...; [divisors] NAME = 2*D + P1 - H;
// [mw] generators = D:14, E:4  and  base = NAME. '#' starts a comment.
// Names must be defined before use; points are checked against the curve.
// Errors carry the offending line number as payload.
CurveFileData parse_curve_file(const std::string& text);

const Divisor& find_divisor(const CurveFileData& data, const std::string& name);

// one row per line, entries comma separated, each a linear form or 0
LinMatrix parse_matrix_file(const std::string& text);
// inverse of parse_matrix_file up to whitespace
std::string render_matrix(const LinMatrix& m);

}  // namespace detrep
