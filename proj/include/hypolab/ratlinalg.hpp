#pragma once

// Exact linear algebra over the rationals: reduced row echelon form,
// rank, kernels, inverses and characteristic polynomials. Everything here
// is dense and intended for the small dimensions of the Lie-algebra and
// cochain computations (dim <= ~30).

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hypolab/rational.hpp"

namespace hypolab {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;  // row-major, rectangular

inline RatMat rat_zeros(std::size_t rows, std::size_t cols) {
  return RatMat(rows, RatVec(cols, Rational(0)));
}

inline RatMat rat_identity(std::size_t n) {
  RatMat m = rat_zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline RatMat rat_mul(const RatMat& a, const RatMat& b) {
  if (a.empty() || b.empty()) return {};
  if (a[0].size() != b.size()) throw std::invalid_argument("rat_mul: shape mismatch");
  RatMat c = rat_zeros(a.size(), b[0].size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t l = 0; l < b.size(); ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

inline RatVec rat_mul_vec(const RatMat& a, const RatVec& x) {
  RatVec y(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != x.size()) throw std::invalid_argument("rat_mul_vec: shape mismatch");
    for (std::size_t j = 0; j < x.size(); ++j)
      if (a[i][j] != 0 && x[j] != 0) y[i] += a[i][j] * x[j];
  }
  return y;
}

inline RatMat rat_transpose(const RatMat& a) {
  if (a.empty()) return {};
  RatMat t = rat_zeros(a[0].size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

/// In-place Gauss-Jordan reduction to RREF. Returns (rank, pivot columns).
inline std::pair<int, std::vector<int>> rref(RatMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return {0, pivots};
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rational inv = m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] /= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return {static_cast<int>(r), pivots};
}

inline int rat_rank(RatMat m) { return rref(m).first; }

/// Basis (as rows, in RREF) of the row space of m.
inline RatMat row_space_basis(RatMat m) {
  auto [rank, pivots] = rref(m);
  m.resize(rank);
  return m;
}

/// Basis of { x : m x = 0 }, one vector per row.
inline RatMat kernel_basis(RatMat m) {
  if (m.empty()) return {};
  std::size_t cols = m[0].size();
  auto [rank, pivots] = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  RatMat basis;
  for (std::size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    RatVec v(cols, Rational(0));
    v[fc] = 1;
    for (int i = 0; i < rank; ++i) v[pivots[i]] = -m[i][fc];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves A x = b if consistent; returns false otherwise.
inline bool rat_solve(const RatMat& a, const RatVec& b, RatVec& x) {
  if (a.empty()) return true;
  std::size_t cols = a[0].size();
  RatMat aug = a;
  for (std::size_t i = 0; i < a.size(); ++i) aug[i].push_back(b[i]);
  auto [rank, pivots] = rref(aug);
  for (int i = 0; i < rank; ++i)
    if (pivots[i] == static_cast<int>(cols)) return false;  // row (0 ... 0 | 1)
  x.assign(cols, Rational(0));
  for (int i = 0; i < rank; ++i) x[pivots[i]] = aug[i][cols];
  return true;
}

inline RatMat rat_inverse(const RatMat& a) {
  std::size_t n = a.size();
  if (n == 0 || a[0].size() != n) throw std::invalid_argument("rat_inverse: not square");
  RatMat aug = a;
  for (std::size_t i = 0; i < n; ++i) {
    RatVec id(n, Rational(0));
    id[i] = 1;
    aug[i].insert(aug[i].end(), id.begin(), id.end());
  }
  auto [rank, pivots] = rref(aug);
  if (rank != static_cast<int>(n)) throw std::invalid_argument("rat_inverse: singular matrix");
  RatMat inv = rat_zeros(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

inline Rational rat_trace(const RatMat& a) {
  Rational t = 0;
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

/// Characteristic polynomial coefficients c of det(x I - A), c[i] the
/// coefficient of x^i (c[n] = 1), via Faddeev-LeVerrier.
inline RatVec charpoly(const RatMat& a) {
  std::size_t n = a.size();
  RatVec c(n + 1, Rational(0));
  c[n] = 1;
  RatMat m = rat_identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = rat_mul(a, m);
    Rational ck = -rat_trace(m) / Rational(static_cast<int>(k));
    c[n - k] = ck;
    for (std::size_t i = 0; i < n; ++i) m[i][i] += ck;
  }
  return c;
}

/// Is v in the row span of the (already reduced) basis rows?
inline bool in_row_span(const RatMat& rref_rows, const RatVec& v) {
  RatMat m = rref_rows;
  m.push_back(v);
  return rat_rank(std::move(m)) == static_cast<int>(rref_rows.size());
}

}  // namespace hypolab
