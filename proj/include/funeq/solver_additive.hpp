#pragma once

#include <optional>
#include <string>
#include <vector>

#include "funeq/automorphism.hpp"
#include "funeq/problem.hpp"

namespace funeq {

// Outcome of the additive (p = 1) solve. The particular operator is
// normalized to realize inhomogeneity 1, i.e. it already solves the
// equation with c = 1; for other c multiply by c.
struct SolutionSpace {
  enum class Classification { identity_shortcut, operator_particular, homogeneous_only, empty };

  struct Generator {
    AutoAction action;
    OperatorKernelResult kernel;
  };

  Classification classification = Classification::empty;
  std::optional<DiffOperator> particular;
  std::optional<FieldElement> c_tilde;  // data constant before normalization
  std::vector<DiffOperator> kernel;     // null space of the full system
  std::vector<Generator> generators;    // automorphism part, when searched
  RegularityReport regularity;
  std::vector<std::string> notes;

  bool nonempty() const {
    return particular.has_value() || !kernel.empty() || !generators.empty();
  }
};

// Identity shortcut: sum a_i alpha_i = sum a_i beta_i = c-tilde != 0
// (restricted to the active sides) yields the particular (1/c-tilde) x.
std::optional<std::pair<FieldElement, DiffOperator>> identity_shortcut(const ProblemSpec& spec);

// Rows sum_i w_i D_m(param_i) for all m <= bounds on every active side;
// the inhomogeneous flag marks the |m| = 0 rows with the c-tilde unit.
LinearSystem build_system_weighted(const ProblemSpec& spec,
                                   const std::vector<FieldElement>& weights,
                                   const MultiIndex& bounds, bool inhomogeneous);
LinearSystem build_system(const ProblemSpec& spec);

DiffOperator operator_from_assignment(const TowerPtr& tower, const MultiIndex& bounds,
                                      const std::vector<MultiIndex>& columns,
                                      const std::vector<FieldElement>& assignment);

// Full p = 1 pipeline: shortcut, system, exact solve, automorphism search,
// oracle recheck of everything emitted.
SolutionSpace solve_additive(const ProblemSpec& spec, bool with_automorphisms = true);

}  // namespace funeq
