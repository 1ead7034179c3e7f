#pragma once

#include <optional>
#include <vector>

#include "funeq/diffop.hpp"

namespace funeq {

enum class Side { alpha, beta };

// Linear system over K for the unknown operator coefficients. One row per
// (multi-index, side); the right-hand side carries the c-tilde marker on the
// |m| = 0 rows. Rows and columns follow lexicographic order.
struct LinearSystem {
  struct Row {
    MultiIndex m;
    Side side;
    std::vector<FieldElement> coeffs;  // one per column
    bool rhs_is_ctilde;                // true on |m| = 0 rows
  };

  TowerPtr tower;
  std::vector<MultiIndex> columns;  // lex ascending, all j <= bounds
  std::vector<Row> rows;

  int column_of(const MultiIndex& j) const;
};

// Exact solve with c-tilde normalized to 1 on the marked rows.
//  - particular: a solution of A x = rhs when consistent
//  - kernel: basis of the null space of A, ordered by free column
struct LinearSolveResult {
  std::optional<std::vector<FieldElement>> particular;
  std::vector<std::vector<FieldElement>> kernel;
};

LinearSolveResult solve(const LinearSystem& system);

// same elimination for an explicit matrix and right-hand side
LinearSolveResult solve_dense(const TowerPtr& tower,
                              std::vector<std::vector<FieldElement>> matrix,
                              std::vector<FieldElement> rhs);

}  // namespace funeq
