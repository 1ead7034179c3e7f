#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "funeq/problem.hpp"

namespace funeq {

// Candidate monomial generator for degree p: the p-additive function
// (x_1..x_p) -> prod_j sigma_j(D_j(x_j)), diagonalized to x -> prod sigma_j(D_j(x)).
struct ProductGenerator {
  std::vector<std::pair<AutoAction, DiffOperator>> factors;
};

// Degree-p identity shortcut: all pure and (in full mode) binomial-weighted
// mixed power sums agree and are nonzero; the solution is coefficient * x^p.
struct HigherShortcut {
  FieldElement c_tilde_p;
  FieldElement coefficient;  // 1 / c_tilde_p, for c normalized to 1
};
std::optional<HigherShortcut> identity_shortcut_p(const ProblemSpec& spec);

// Transcendence-degree-1 product conditions for separated mode: the data
// conditions involve only the problem data; the main equation constrains the
// product of the top factor coefficients.
struct ProductConditionsDeg1 {
  std::vector<int> factor_bounds;
  // tuples (j_1..j_p) with sum < sum(J): value must vanish
  std::vector<std::pair<std::vector<int>, FieldElement>> data_conditions;
  FieldElement main_sum;  // sum_i a_i prod_l d^{J_l}(param_i)
  bool data_ok = false;
  bool feasible = false;  // data_ok and main_sum != 0
  // main equation: (prod_l c'_{l,J_l}) * main_sum = c-tilde
};
ProductConditionsDeg1 build_product_conditions_deg1(const ProblemSpec& spec,
                                                    const std::vector<int>& factor_bounds);

// p = 2 bilinear constraint set over the two coefficient families.
struct BilinearConstraint {
  Side side1, side2;
  int weight;  // binomial weight of the equation family
  MultiIndex m1, m2;
  bool is_ctilde_row;
  // (j1, j2) -> data coefficient of c1[j1] * c2[j2]
  std::map<std::pair<MultiIndex, MultiIndex>, FieldElement> table;
};
struct BilinearSystemP2 {
  MultiIndex bounds1, bounds2;
  std::vector<BilinearConstraint> constraints;
};
BilinearSystemP2 build_mixed_system_p2(const ProblemSpec& spec, const MultiIndex& bounds1,
                                       const MultiIndex& bounds2);
FieldElement eval_constraint(const BilinearConstraint& c, const DiffOperator& d1,
                             const DiffOperator& d2);

// Expands every equation of the p-additive system for the candidate and
// checks that it reduces to c_tilde_p * x_1 ... x_p exactly; with `expected`
// given, the realized c_tilde_p must also equal it.
std::pair<bool, FieldElement> verify_product_solution(
    const ProductGenerator& g, const ProblemSpec& spec,
    const std::optional<FieldElement>& expected = std::nullopt);

}  // namespace funeq
