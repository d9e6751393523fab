#pragma once

#include <optional>
#include <vector>

namespace qkappa {

/// Dense Gauss-Jordan routines over an exact field (rationals, cyclotomics).
/// Row-echelon pivots are the first nonzero entries; no pivot-size heuristics
/// are needed in exact arithmetic.
template <class F>
using DenseMatrix = std::vector<std::vector<F>>;

template <class F>
int rref_in_place(DenseMatrix<F>& m, std::vector<int>* pivot_cols = nullptr) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (!(m[r][col] == F(0))) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    F inv = F(1) / m[rank][col];
    for (int c = col; c < cols; ++c) m[rank][c] = m[rank][c] * inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == F(0)) continue;
      F factor = m[r][col];
      for (int c = col; c < cols; ++c) m[r][c] = m[r][c] - factor * m[rank][c];
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++rank;
  }
  return rank;
}

template <class F>
int rank_of(DenseMatrix<F> m) {
  return rref_in_place(m);
}

/// Basis of the right null space, one vector per non-pivot column.
template <class F>
std::vector<std::vector<F>> null_space(DenseMatrix<F> m) {
  if (m.empty()) return {};
  const int cols = static_cast<int>(m[0].size());
  std::vector<int> pivots;
  int rank = rref_in_place(m, &pivots);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(cols, F(0));
    v[free] = F(1);
    for (int r = 0; r < rank; ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
std::optional<DenseMatrix<F>> inverse_of(const DenseMatrix<F>& m) {
  const int n = static_cast<int>(m.size());
  DenseMatrix<F> aug(n, std::vector<F>(2 * n, F(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = F(1);
  }
  if (rref_in_place(aug) != n) return std::nullopt;
  DenseMatrix<F> inv(n, std::vector<F>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

}  // namespace qkappa
