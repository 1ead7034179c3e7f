#include "funeq/linsys.hpp"

#include <algorithm>
#include <cassert>

#include "funeq/error.hpp"

namespace funeq {

int LinearSystem::column_of(const MultiIndex& j) const {
  auto it = std::lower_bound(columns.begin(), columns.end(), j);
  assert(it != columns.end() && *it == j);
  return static_cast<int>(it - columns.begin());
}

LinearSolveResult solve_dense(const TowerPtr& tower,
                              std::vector<std::vector<FieldElement>> a,
                              std::vector<FieldElement> rhs) {
  const size_t nrows = a.size();
  const size_t ncols = nrows ? a[0].size() : 0;
  assert(rhs.size() == nrows);

  // fraction-free forward elimination (Bareiss); divisions are exact
  std::vector<int> pivot_col;  // per eliminated row
  FieldElement prev_pivot = tower->one();
  size_t row = 0;
  for (size_t col = 0; col < ncols && row < nrows; ++col) {
    size_t piv = row;
    while (piv < nrows && a[piv][col].is_zero()) ++piv;
    if (piv == nrows) continue;
    std::swap(a[piv], a[row]);
    std::swap(rhs[piv], rhs[row]);
    const FieldElement pivot = a[row][col];
    for (size_t i = row + 1; i < nrows; ++i) {
      const FieldElement factor = a[i][col];
      for (size_t j = col; j < ncols; ++j)
        a[i][j] = (pivot * a[i][j] - factor * a[row][j]) / prev_pivot;
      rhs[i] = (pivot * rhs[i] - factor * rhs[row]) / prev_pivot;
    }
    prev_pivot = pivot;
    pivot_col.push_back(static_cast<int>(col));
    ++row;
  }
  const size_t rank = row;

  LinearSolveResult result;

  // consistency: zero rows must have zero rhs
  bool consistent = true;
  for (size_t i = rank; i < nrows; ++i)
    if (!rhs[i].is_zero()) {
      consistent = false;
      break;
    }

  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivot_col) is_pivot[c] = true;

  auto back_substitute = [&](const std::vector<FieldElement>& b,
                             std::vector<FieldElement> x) {
    for (size_t r = rank; r-- > 0;) {
      int c = pivot_col[r];
      FieldElement s = b[r];
      for (size_t j = c + 1; j < ncols; ++j)
        if (!a[r][j].is_zero()) s = s - a[r][j] * x[j];
      x[c] = s / a[r][c];
    }
    return x;
  };

  if (consistent) {
    std::vector<FieldElement> x(ncols, tower->zero());
    result.particular = back_substitute(rhs, std::move(x));
  }

  // kernel basis: one vector per free column, ascending
  for (size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<FieldElement> x(ncols, tower->zero());
    x[f] = tower->one();
    std::vector<FieldElement> b(rank, tower->zero());
    for (size_t r = 0; r < rank; ++r) b[r] = -a[r][f];
    // solve for pivot variables with the free column fixed to 1
    for (size_t r = rank; r-- > 0;) {
      int c = pivot_col[r];
      FieldElement s = b[r];
      for (size_t j = c + 1; j < ncols; ++j)
        if (j != f && !a[r][j].is_zero()) s = s - a[r][j] * x[j];
      x[c] = s / a[r][c];
    }
    result.kernel.push_back(std::move(x));
  }

  return result;
}

LinearSolveResult solve(const LinearSystem& system) {
  std::vector<std::vector<FieldElement>> a;
  std::vector<FieldElement> rhs;
  a.reserve(system.rows.size());
  for (const auto& r : system.rows) {
    a.push_back(r.coeffs);
    rhs.push_back(r.rhs_is_ctilde ? system.tower->one() : system.tower->zero());
  }
  return solve_dense(system.tower, std::move(a), std::move(rhs));
}

}  // namespace funeq
