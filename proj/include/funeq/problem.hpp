#pragma once

#include <string>
#include <vector>

#include "funeq/auto_action.hpp"
#include "funeq/diffop.hpp"
#include "funeq/linsys.hpp"

namespace funeq {

enum class Mode { alpha_only, beta_only, full };

std::string mode_name(Mode m);

// Instance of sum a_i f(alpha_i x + beta_i y) = c * sum x^l y^(p-l) with c
// normalized to 1; the solution scales by c / c-tilde.
struct ProblemSpec {
  TowerPtr tower;
  int n = 0;
  std::vector<FieldElement> a;
  std::vector<FieldElement> alpha;
  std::vector<FieldElement> beta;  // may be empty outside beta/full modes
  int p = 1;
  MultiIndex bounds;                    // J_1..J_k, defaults to 2 each
  std::vector<int> factor_bounds;       // per-factor bounds for p >= 2
  Mode mode = Mode::alpha_only;
  std::vector<AutoAction> user_candidates;
  int root_degree_cap = 1;

  void validate() const;  // throws FuneqError with field-level diagnostics

  const std::vector<FieldElement>& params(Side side) const {
    return side == Side::alpha ? alpha : beta;
  }
  std::vector<Side> sides() const;

  // sum_i a_i d^d(param_i), the data coefficients of the linear systems
  FieldElement data_sum(Side side, const MultiIndex& d) const;
  // the same with replaced weights
  FieldElement weighted_data_sum(const std::vector<FieldElement>& weights, Side side,
                                 const MultiIndex& d) const;
};

struct RegularityReport {
  bool checked = false;  // false when the mode has only one parameter list
  bool sum_condition_ok = true;        // alpha_i + beta_i != 0
  bool determinant_condition_ok = true;  // alpha_i beta_j - alpha_j beta_i != 0
  std::vector<std::string> warnings;
};

// Advisory regularity check; the solver proceeds regardless.
RegularityReport check_regularity(const ProblemSpec& spec);

}  // namespace funeq
