#include "cy33/linalg.hpp"

#include <algorithm>

namespace cy33 {

Rat det(QMat a) {
  const size_t n = a.size();
  Rat d(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && is_zero(a[piv][col])) ++piv;
    if (piv == n) return Rat(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      d = -d;
    }
    d *= a[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (is_zero(a[r][col])) continue;
      Rat f = a[r][col] / a[col][col];
      for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return d;
}

int rank(QMat a) {
  if (a.empty()) return 0;
  const size_t rows = a.size(), cols = a[0].size();
  size_t rk = 0;
  for (size_t col = 0; col < cols && rk < rows; ++col) {
    size_t piv = rk;
    while (piv < rows && is_zero(a[piv][col])) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rk]);
    for (size_t r = rk + 1; r < rows; ++r) {
      if (is_zero(a[r][col])) continue;
      Rat f = a[r][col] / a[rk][col];
      for (size_t c = col; c < cols; ++c) a[r][c] -= f * a[rk][c];
    }
    ++rk;
  }
  return static_cast<int>(rk);
}

std::optional<QVec> solve(QMat a, QVec b) {
  const size_t n = a.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && is_zero(a[piv][col])) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(a[r][col])) continue;
      Rat f = a[r][col] / a[col][col];
      for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  QVec x(n);
  for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

std::optional<QMat> inverse(const QMat& a) {
  const size_t n = a.size();
  QMat aug(n, QVec(2 * n, Rat(0)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && is_zero(aug[piv][col])) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(aug[piv], aug[col]);
    Rat p = aug[col][col];
    for (size_t c = 0; c < 2 * n; ++c) aug[col][c] /= p;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(aug[r][col])) continue;
      Rat f = aug[r][col];
      for (size_t c = 0; c < 2 * n; ++c) aug[r][c] -= f * aug[col][c];
    }
  }
  QMat inv(n, QVec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

QMat nullspace(QMat a) {
  if (a.empty()) return {};
  const size_t rows = a.size(), cols = a[0].size();
  std::vector<int> pivot_col;
  size_t rk = 0;
  for (size_t col = 0; col < cols && rk < rows; ++col) {
    size_t piv = rk;
    while (piv < rows && is_zero(a[piv][col])) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rk]);
    Rat p = a[rk][col];
    for (size_t c = 0; c < cols; ++c) a[rk][c] /= p;
    for (size_t r = 0; r < rows; ++r) {
      if (r == rk || is_zero(a[r][col])) continue;
      Rat f = a[r][col];
      for (size_t c = 0; c < cols; ++c) a[r][c] -= f * a[rk][c];
    }
    pivot_col.push_back(static_cast<int>(col));
    ++rk;
  }
  QMat kernel;
  for (size_t fc = 0; fc < cols; ++fc) {
    if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(fc)) !=
        pivot_col.end())
      continue;
    QVec v(cols, Rat(0));
    v[fc] = 1;
    for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -a[r][fc];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

}  // namespace cy33
