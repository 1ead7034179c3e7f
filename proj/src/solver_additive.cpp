#include "funeq/solver_additive.hpp"

#include <algorithm>

#include "funeq/error.hpp"
#include "funeq/oracle.hpp"

namespace funeq {

std::optional<std::pair<FieldElement, DiffOperator>> identity_shortcut(const ProblemSpec& spec) {
  const MultiIndex zero(spec.tower->k(), 0);
  std::optional<FieldElement> c_tilde;
  for (Side side : spec.sides()) {
    FieldElement s = spec.data_sum(side, zero);
    if (!c_tilde)
      c_tilde = s;
    else if (*c_tilde != s)
      return std::nullopt;
  }
  if (!c_tilde || c_tilde->is_zero()) return std::nullopt;
  DiffOperator d(spec.tower, zero);
  d.set_coeff(zero, c_tilde->inv());
  return std::make_pair(*c_tilde, std::move(d));
}

LinearSystem build_system_weighted(const ProblemSpec& spec,
                                   const std::vector<FieldElement>& weights,
                                   const MultiIndex& bounds, bool inhomogeneous) {
  LinearSystem system;
  system.tower = spec.tower;
  system.columns = indices_up_to(bounds);

  for (Side side : spec.sides()) {
    // data sums S_d = sum_i w_i d^d(param_i) for every d <= bounds
    std::map<MultiIndex, FieldElement> s;
    for (const MultiIndex& d : system.columns)
      s.emplace(d, spec.weighted_data_sum(weights, side, d));

    for (const MultiIndex& m : system.columns) {
      LinearSystem::Row row;
      row.m = m;
      row.side = side;
      row.rhs_is_ctilde = inhomogeneous && total_degree(m) == 0;
      row.coeffs.reserve(system.columns.size());
      for (const MultiIndex& j : system.columns) {
        if (!index_leq(m, j)) {
          row.coeffs.push_back(spec.tower->zero());
          continue;
        }
        BigRat w(1);
        for (size_t i = 0; i < m.size(); ++i)
          w *= BigRat::from_int(
              binomial(static_cast<unsigned>(j[i]), static_cast<unsigned>(m[i])));
        row.coeffs.push_back(s.at(index_sub(j, m)).scaled(w));
      }
      system.rows.push_back(std::move(row));
    }
  }
  return system;
}

LinearSystem build_system(const ProblemSpec& spec) {
  return build_system_weighted(spec, spec.a, spec.bounds, /*inhomogeneous=*/true);
}

DiffOperator operator_from_assignment(const TowerPtr& tower, const MultiIndex& bounds,
                                      const std::vector<MultiIndex>& columns,
                                      const std::vector<FieldElement>& assignment) {
  DiffOperator d(tower, bounds);
  for (size_t i = 0; i < columns.size(); ++i) d.set_coeff(columns[i], assignment[i]);
  return d;
}

namespace {

void oracle_recheck(const AutoAction& sigma, const DiffOperator& d, const ProblemSpec& spec,
                    const FieldElement& expected_c, const std::string& what) {
  for (Side side : spec.sides()) {
    ResidualProfile profile = residual_profile(sigma, d, spec, side);
    if (!profile.matches(expected_c))
      throw FuneqError("internal error: the oracle rejected the " + what);
  }
}

}  // namespace

SolutionSpace solve_additive(const ProblemSpec& spec, bool with_automorphisms) {
  spec.validate();
  if (spec.p != 1) throw FuneqError("p: the additive solver handles p = 1 only");

  SolutionSpace out;
  out.regularity = check_regularity(spec);
  for (const auto& w : out.regularity.warnings) out.notes.push_back("regularity: " + w);
  for (const auto& w : spec.tower->minpoly_warnings()) out.notes.push_back("tower: " + w);

  const AutoAction id = AutoAction::identity_action(spec.tower);

  auto shortcut = identity_shortcut(spec);
  LinearSystem system = build_system(spec);
  LinearSolveResult sol = solve(system);

  if (shortcut) {
    out.classification = SolutionSpace::Classification::identity_shortcut;
    out.c_tilde = shortcut->first;
    out.particular = shortcut->second;
  } else if (sol.particular) {
    out.classification = SolutionSpace::Classification::operator_particular;
    out.c_tilde = spec.tower->one();
    out.particular =
        operator_from_assignment(spec.tower, spec.bounds, system.columns, *sol.particular);
  } else {
    out.notes.push_back("no particular solution at these bounds (larger bounds may succeed)");
  }
  for (const auto& vec : sol.kernel)
    out.kernel.push_back(operator_from_assignment(spec.tower, spec.bounds, system.columns, vec));

  if (with_automorphisms) {
    CharEquationResult ceq = char_equation(spec);
    std::vector<AutoAction> actions;
    if (ceq.equation) {
      RootSearchResult roots = find_roots_monomial(*ceq.equation, spec, spec.root_degree_cap);
      actions = std::move(roots.actions);
      for (const auto& n : roots.notes) out.notes.push_back("automorphisms: " + n);
    } else {
      out.notes.push_back("automorphisms: " + ceq.note);
    }
    for (const AutoAction& cand : spec.user_candidates) {
      std::string diag;
      if (!verify_action(cand, spec, &diag)) {
        out.notes.push_back("user candidate rejected: " + diag);
        continue;
      }
      bool dup = false;
      for (const auto& a : actions)
        if (a.key() == cand.key()) dup = true;
      if (!dup) actions.push_back(cand);
    }
    std::stable_sort(actions.begin(), actions.end(),
                     [](const AutoAction& x, const AutoAction& y) {
                       auto rank = [](const AutoAction& a) {
                         return static_cast<int>(a.provenance);
                       };
                       if (rank(x) != rank(y)) return rank(x) < rank(y);
                       return x.key() < y.key();
                     });
    for (const AutoAction& action : actions) {
      SolutionSpace::Generator gen{action,
                                   homogeneous_operator_kernel(action, spec, spec.bounds)};
      out.generators.push_back(std::move(gen));
    }
  }

  // every emitted operator is re-verified through the grid oracle
  if (out.particular) oracle_recheck(id, *out.particular, spec, spec.tower->one(), "particular");
  for (const auto& kd : out.kernel) oracle_recheck(id, kd, spec, spec.tower->zero(), "kernel element");
  for (const auto& gen : out.generators) {
    for (const auto& kd : gen.kernel.kernel)
      oracle_recheck(gen.action, kd, spec, spec.tower->zero(), "generator kernel element");
  }

  if (!out.particular) {
    out.classification = out.nonempty() ? SolutionSpace::Classification::homogeneous_only
                                        : SolutionSpace::Classification::empty;
  }
  return out;
}

}  // namespace funeq
