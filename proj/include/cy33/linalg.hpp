#pragma once

#include <optional>

#include "cy33/rational.hpp"

namespace cy33 {

// Dense exact rational linear algebra, sized for the 5- and 6-dimensional
// systems of this project. Plain Gaussian elimination with full pivoting by
// first nonzero entry; exactness makes pivot magnitude irrelevant.

Rat det(QMat a);

int rank(QMat a);

// Solves a*x = b for square nonsingular a. Returns nullopt if singular.
std::optional<QVec> solve(QMat a, QVec b);

// Inverse of a square matrix; nullopt if singular.
std::optional<QMat> inverse(const QMat& a);

// Basis of the right kernel {x : a*x = 0} of a (possibly non-square) matrix.
QMat nullspace(QMat a);

inline QVec mat_vec(const QMat& a, const QVec& x) {
  QVec y(a.size(), Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

inline Rat dot(const QVec& a, const QVec& b) {
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace cy33
