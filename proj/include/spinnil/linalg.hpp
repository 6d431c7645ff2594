#pragma once

#include <optional>
#include <vector>

#include "spinnil/scalars.hpp"

namespace spinnil {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<int> rat_rref_inplace(RatMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(m[r], m[sel]);
    Rat inv = m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] /= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline int rat_rank(RatMat m) { return static_cast<int>(rat_rref_inplace(m).size()); }

/// Nonzero rows of the reduced row echelon form (a canonical basis of the
/// row space, so two row spaces are equal iff these agree).
inline RatMat rat_row_space_basis(RatMat m) {
  auto pivots = rat_rref_inplace(m);
  m.resize(pivots.size());
  return m;
}

inline bool rat_spans_equal(const RatMat& a, const RatMat& b) {
  return rat_row_space_basis(a) == rat_row_space_basis(b);
}

/// Is v in the row space of rows?
inline bool rat_in_span(RatMat rows, const RatVec& v) {
  int r0 = rat_rank(rows);
  rows.push_back(v);
  return rat_rank(std::move(rows)) == r0;
}

/// Basis of the null space {x : m x = 0}; vectors have length cols.
inline std::vector<RatVec> rat_kernel(RatMat m) {
  if (m.empty()) return {};
  const int cols = static_cast<int>(m[0].size());
  auto pivots = rat_rref_inplace(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(cols, Rat(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// One solution of a x = b (free variables set to zero), or nullopt.
inline std::optional<RatVec> rat_solve(RatMat a, const RatVec& b) {
  const int rows = static_cast<int>(a.size());
  if (rows != static_cast<int>(b.size())) throw std::invalid_argument("shape mismatch");
  const int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
  for (int i = 0; i < rows; ++i) a[i].push_back(b[i]);
  auto pivots = rat_rref_inplace(a);
  RatVec x(cols, Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == cols) return std::nullopt;  // pivot in the augmented column
    x[pivots[r]] = a[r][cols];
  }
  return x;
}

/// Exact integer determinant (Bareiss fraction-free elimination).
inline Int int_det(std::vector<std::vector<Int>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return Int(1);
  Int prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int sel = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          sel = i;
          break;
        }
      if (sel < 0) return Int(0);
      std::swap(m[k], m[sel]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = num / prev;  // exact by Bareiss
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace spinnil
