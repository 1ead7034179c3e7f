#pragma once

#include <map>

#include "funeq/problem.hpp"

namespace funeq {

// Residual coefficients lambda_m of x -> sum_i sigma^{-1}(a_i) D(param_i x),
// reconstructed from monomial-grid evaluation and exact falling-factorial
// inversion. A candidate solves the side iff lambda_0 matches the advertised
// inhomogeneity and every |m| >= 1 coefficient vanishes.
struct ResidualProfile {
  Side side;
  MultiIndex bounds;
  std::map<MultiIndex, FieldElement> lambda;

  bool homogeneous() const;                       // all lambda vanish
  bool matches(const FieldElement& c_tilde) const;  // lambda_0 == c_tilde, rest 0
};

// grid_base overrides the per-variable starting exponents M_j (default
// J_j + 1, which keeps every falling factorial nonzero)
ResidualProfile residual_profile(const AutoAction& sigma, const DiffOperator& d,
                                 const ProblemSpec& spec, Side side,
                                 const MultiIndex* grid_base = nullptr);

// Direct check of sum a_i f(alpha_i x + beta_i y) = c_tilde (x + y) on a
// monomial grid, expanding f additively; exact, full mode only.
bool grid_check_full(const AutoAction& sigma, const DiffOperator& d,
                     const FieldElement& c_tilde, const ProblemSpec& spec, int sample_size);

}  // namespace funeq
