#pragma once

#include <vector>

#include "epure/kernel.hpp"

namespace epure {

namespace detail {

inline bool pivot_usable(const Rat& x, double) { return !x.is_zero(); }
inline bool pivot_usable(double x, double scale) {
  return std::abs(x) > 1e-13 * (scale > 0 ? scale : 1.0);
}

inline bool pivot_better(const Rat&, const Rat&) { return false; }
inline bool pivot_better(double cand, double best) {
  return std::abs(cand) > std::abs(best);
}

}  // namespace detail

// Basis of the right null space of an m x n matrix, by Gaussian elimination.
// Exact scalars pivot on the first nonzero entry; floats pivot on the entry
// of largest magnitude and treat entries below 1e-13 * (largest initial
// magnitude) as zero.  Deterministic for a given input.
template <class R>
std::vector<std::vector<R>> null_space(std::vector<std::vector<R>> m, std::size_t ncols) {
  const std::size_t nrows = m.size();
  double scale = 0;
  if constexpr (!ring<R>::exact) {
    for (const auto& row : m)
      for (double x : row) scale = std::max(scale, std::abs(x));
  }

  std::vector<std::size_t> pivot_col_of_row;
  std::vector<bool> col_is_pivot(ncols, false);
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t best = nrows;
    for (std::size_t i = r; i < nrows; ++i) {
      if (!detail::pivot_usable(m[i][c], scale)) continue;
      if (best == nrows || detail::pivot_better(m[i][c], m[best][c])) best = i;
      if constexpr (ring<R>::exact) break;
    }
    if (best == nrows) continue;
    std::swap(m[r], m[best]);
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == r) continue;
      if constexpr (ring<R>::exact) {
        if (m[i][c].is_zero()) continue;
      } else {
        if (m[i][c] == 0) continue;
      }
      R f = m[i][c] / m[r][c];
      for (std::size_t j = 0; j < ncols; ++j) m[i][j] = m[i][j] - f * m[r][j];
      m[i][c] = R(0);
    }
    col_is_pivot[c] = true;
    pivot_col_of_row.push_back(c);
    ++r;
  }

  std::vector<std::vector<R>> basis;
  for (std::size_t c = 0; c < ncols; ++c) {
    if (col_is_pivot[c]) continue;
    std::vector<R> v(ncols, R(0));
    v[c] = R(1);
    for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i) {
      std::size_t pc = pivot_col_of_row[i];
      v[pc] = -m[i][c] / m[i][pc];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class R>
std::size_t matrix_rank(const std::vector<std::vector<R>>& m, std::size_t ncols) {
  return ncols - null_space(m, ncols).size();
}

}  // namespace epure
