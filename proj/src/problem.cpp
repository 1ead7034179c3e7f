#include "funeq/problem.hpp"

#include "funeq/error.hpp"
#include "funeq/expr.hpp"

namespace funeq {

std::string mode_name(Mode m) {
  switch (m) {
    case Mode::alpha_only: return "alpha";
    case Mode::beta_only: return "beta";
    case Mode::full: return "full";
  }
  return "?";
}

void ProblemSpec::validate() const {
  if (!tower) throw FuneqError("problem: missing tower");
  if (n < 1) throw FuneqError("n: must be at least 1");
  if (static_cast<int>(a.size()) != n) throw FuneqError("a: expected " + std::to_string(n) + " entries");
  bool all_zero = true;
  for (const auto& ai : a)
    if (!ai.is_zero()) all_zero = false;
  if (all_zero) throw FuneqError("a: coefficients must not all be zero");
  if (p < 1) throw FuneqError("p: degree must be at least 1");
  if (mode != Mode::beta_only && static_cast<int>(alpha.size()) != n)
    throw FuneqError("alpha: expected " + std::to_string(n) + " entries");
  if (mode != Mode::alpha_only && static_cast<int>(beta.size()) != n)
    throw FuneqError("beta: expected " + std::to_string(n) + " entries (required by mode " +
                     mode_name(mode) + ")");
  if (static_cast<int>(bounds.size()) != tower->k())
    throw FuneqError("bounds: expected " + std::to_string(tower->k()) + " entries");
  for (int b : bounds)
    if (b < 0) throw FuneqError("bounds: entries must be nonnegative");
  if (p >= 2) {
    if (static_cast<int>(factor_bounds.size()) != p)
      throw FuneqError("factor-bounds: expected " + std::to_string(p) + " entries");
    for (int b : factor_bounds)
      if (b < 0) throw FuneqError("factor-bounds: entries must be nonnegative");
  }
  if (root_degree_cap < 0) throw FuneqError("root-cap: must be nonnegative");
}

std::vector<Side> ProblemSpec::sides() const {
  switch (mode) {
    case Mode::alpha_only: return {Side::alpha};
    case Mode::beta_only: return {Side::beta};
    case Mode::full: return {Side::alpha, Side::beta};
  }
  return {};
}

FieldElement ProblemSpec::data_sum(Side side, const MultiIndex& d) const {
  return weighted_data_sum(a, side, d);
}

FieldElement ProblemSpec::weighted_data_sum(const std::vector<FieldElement>& weights, Side side,
                                            const MultiIndex& d) const {
  const auto& prm = params(side);
  FieldElement acc = tower->zero();
  for (int i = 0; i < n; ++i) acc = acc + weights[i] * prm[i].iterated_partial(d);
  return acc;
}

RegularityReport check_regularity(const ProblemSpec& spec) {
  RegularityReport rep;
  if (spec.mode != Mode::full) {
    rep.warnings.push_back("regularity check skipped: mode " + mode_name(spec.mode) +
                           " has a single parameter family");
    return rep;
  }
  rep.checked = true;
  for (int i = 0; i < spec.n; ++i) {
    if ((spec.alpha[i] + spec.beta[i]).is_zero()) {
      rep.sum_condition_ok = false;
      rep.warnings.push_back("alpha[" + std::to_string(i) + "] + beta[" + std::to_string(i) +
                             "] = 0");
    }
  }
  for (int i = 0; i < spec.n; ++i) {
    for (int j = i + 1; j < spec.n; ++j) {
      FieldElement det = spec.alpha[i] * spec.beta[j] - spec.alpha[j] * spec.beta[i];
      if (det.is_zero()) {
        rep.determinant_condition_ok = false;
        rep.warnings.push_back("parameter pair (" + std::to_string(i) + ", " + std::to_string(j) +
                               ") is proportional");
      }
    }
  }
  return rep;
}

}  // namespace funeq
