#include "linalg.hpp"

#include "errors.hpp"

namespace detrep {

std::vector<int> rref(Mat& a) {
  std::vector<int> pivots;
  if (a.empty()) return pivots;
  std::size_t ncols = a[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < a.size(); ++col) {
    std::size_t sel = row;
    while (sel < a.size() && sgn(a[sel][col]) == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[sel], a[row]);
    Rat inv = Rat(1) / a[row][col];
    for (std::size_t j = col; j < ncols; ++j) a[row][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || sgn(a[i][col]) == 0) continue;
      Rat f = a[i][col];
      for (std::size_t j = col; j < ncols; ++j) a[i][j] -= f * a[row][j];
    }
    pivots.push_back(int(col));
    ++row;
  }
  return pivots;
}

int rank(Mat a) { return int(rref(a).size()); }

Mat kernel_basis(Mat a, int ncols) {
  std::vector<int> pivots = rref(a);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : pivots) is_pivot[p] = true;
  Mat kern;
  for (int free_col = 0; free_col < ncols; ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v(ncols, Rat(0));
    v[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free_col];
    kern.push_back(std::move(v));
  }
  rref(kern);
  return kern;
}

Mat solve_columns(const Mat& a, const Mat& b) {
  std::size_t m = a.size();
  if (b.size() != m) fail(Err::Internal, "solve_columns shape mismatch");
  std::size_t n = m ? a[0].size() : 0;
  std::size_t k = m ? b[0].size() : 0;
  Mat aug(m, Vec(n + k));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    for (std::size_t j = 0; j < k; ++j) aug[i][n + j] = b[i][j];
  }
  std::vector<int> pivots = rref(aug);
  if (pivots.size() != n)
    fail(Err::InternalRankError, pivots.size() > n || (!pivots.empty() && std::size_t(pivots.back()) >= n)
                                     ? "inconsistent linear system"
                                     : "underdetermined linear system");
  for (int p : pivots)
    if (std::size_t(p) >= n) fail(Err::InternalRankError, "inconsistent linear system");
  // rows past the pivots must have zero right-hand side
  for (std::size_t i = n; i < m; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (sgn(aug[i][n + j]) != 0) fail(Err::InternalRankError, "inconsistent linear system");
  Mat x(n, Vec(k));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) x[i][j] = aug[i][n + j];
  return x;
}

}  // namespace detrep
