#pragma once

#include <vector>

#include "rational.hpp"

namespace detrep {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;  // row-major, rows of equal length

// In-place reduced row echelon form. Pivots are chosen as the first nonzero
// entry scanning down each column, so the result is deterministic; returns the
// pivot columns in ascending order. Zero rows sink to the bottom.
std::vector<int> rref(Mat& a);

int rank(Mat a);

// Canonical basis of { x : a x = 0 } as rows, themselves in reduced row
// echelon form. `ncols` covers the empty-matrix case.
Mat kernel_basis(Mat a, int ncols);

// Unique solution X of a X = B (columns of B solved simultaneously).
// Fails with InternalRankError when the system is inconsistent or
// underdetermined.
Mat solve_columns(const Mat& a, const Mat& b);

}  // namespace detrep
