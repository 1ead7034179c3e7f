#pragma once

#include <optional>
#include <string>
#include <vector>

#include "funeq/problem.hpp"

namespace funeq {

// Characteristic equation sum a_i alpha_i(s) = 0 in fresh symbols s_1..s_k,
// denominators cleared. Lives in a doubled tower with variables t.., s..
struct CharEquation {
  TowerPtr s_tower;                    // variables t_1..t_k, s_1..s_k
  std::optional<MultiPoly> alpha_poly;  // per active side, in the 2k variables
  std::optional<MultiPoly> beta_poly;

  std::vector<const MultiPoly*> active_polys() const;
  std::string to_string() const;
};

struct CharEquationResult {
  std::optional<CharEquation> equation;
  std::string note;  // set when the operation is refused
};

// Requires the homogeneous condition sum a_i alpha_i = 0 per active side;
// refused with a note otherwise (the identity shortcut owns that case).
CharEquationResult char_equation(const ProblemSpec& spec);

// Monomial-ansatz root search s_j = q_j * t^(E row j), |E entries| <= cap.
// Zero and rational-constant images are discarded; every returned action
// passes verify_action. For k = 1 the equation is deflated by the found
// linear factors and a residual note is attached to the report.
struct RootSearchResult {
  std::vector<AutoAction> actions;
  std::vector<std::string> notes;
};
RootSearchResult find_roots_monomial(const CharEquation& eq, const ProblemSpec& spec, int cap);

// Exact check sum a_i sigma(alpha_i) = 0 on every active side.
bool verify_action(const AutoAction& sigma, const ProblemSpec& spec, std::string* diag = nullptr);

// Kernel of the homogeneous operator system with weights sigma^{-1}(a_i),
// rows for every m <= J on every active side.
struct OperatorKernelResult {
  bool computed = false;
  std::string note;
  std::vector<DiffOperator> kernel;
};
OperatorKernelResult homogeneous_operator_kernel(const AutoAction& sigma, const ProblemSpec& spec,
                                                 const MultiIndex& bounds);

}  // namespace funeq
