#include "funeq/solver_higher.hpp"

#include <algorithm>

#include "funeq/error.hpp"

namespace funeq {

namespace {

// enumerate tuples 0 <= j_l <= bounds[l]
std::vector<std::vector<int>> tuples_up_to(const std::vector<int>& bounds) {
  return indices_up_to(bounds);
}

int tuple_total(const std::vector<int>& t) { return total_degree(t); }

// side pattern per factor for every equation family of the p-additive
// system under the given mode; weight = binom(p, #alpha slots) on mixed rows
struct Family {
  std::vector<Side> sides;
  int weight;
};

std::vector<Family> equation_families(Mode mode, int p) {
  std::vector<Family> fams;
  if (mode != Mode::beta_only) fams.push_back({std::vector<Side>(p, Side::alpha), 1});
  if (mode != Mode::alpha_only) fams.push_back({std::vector<Side>(p, Side::beta), 1});
  if (mode == Mode::full) {
    // one family per proper subset of factors on the alpha side
    for (unsigned mask = 1; mask + 1 < (1u << p); ++mask) {
      Family f;
      f.sides.resize(p);
      int l = 0;
      for (int j = 0; j < p; ++j) {
        bool on_alpha = mask & (1u << j);
        f.sides[j] = on_alpha ? Side::alpha : Side::beta;
        if (on_alpha) ++l;
      }
      f.weight = static_cast<int>(binomial(static_cast<unsigned>(p), static_cast<unsigned>(l))
                                      .to_int64());
      fams.push_back(std::move(f));
    }
  }
  return fams;
}

}  // namespace

std::optional<HigherShortcut> identity_shortcut_p(const ProblemSpec& spec) {
  if (spec.p < 2) throw FuneqError("p: the higher shortcut handles p >= 2");
  const TowerPtr& tower = spec.tower;
  std::optional<FieldElement> c_tilde;
  auto merge = [&](const FieldElement& v) {
    if (!c_tilde) {
      c_tilde = v;
      return true;
    }
    return *c_tilde == v;
  };
  for (Side side : spec.sides()) {
    FieldElement s = tower->zero();
    for (int i = 0; i < spec.n; ++i) s = s + spec.a[i] * spec.params(side)[i].pow(spec.p);
    if (!merge(s)) return std::nullopt;
  }
  if (spec.mode == Mode::full) {
    for (int l = 1; l <= spec.p - 1; ++l) {
      BigRat w = BigRat::from_int(
          binomial(static_cast<unsigned>(spec.p), static_cast<unsigned>(l)));
      FieldElement s = tower->zero();
      for (int i = 0; i < spec.n; ++i)
        s = s + spec.a[i].scaled(w) * spec.alpha[i].pow(l) * spec.beta[i].pow(spec.p - l);
      if (!merge(s)) return std::nullopt;
    }
  }
  if (!c_tilde || c_tilde->is_zero()) return std::nullopt;
  return HigherShortcut{*c_tilde, c_tilde->inv()};
}

ProductConditionsDeg1 build_product_conditions_deg1(const ProblemSpec& spec,
                                                    const std::vector<int>& factor_bounds) {
  if (spec.tower->k() != 1)
    throw FuneqError("the triangular product reduction requires transcendence degree 1");
  if (spec.mode == Mode::full)
    throw FuneqError("the triangular product reduction works on the separated equations");
  if (static_cast<int>(factor_bounds.size()) != spec.p)
    throw FuneqError("factor-bounds: expected " + std::to_string(spec.p) + " entries");

  const Side side = spec.sides().front();
  const auto& prm = spec.params(side);
  const TowerPtr& tower = spec.tower;

  // cache the derivatives of each parameter up to the maximum factor bound
  int max_b = 0;
  for (int b : factor_bounds) max_b = std::max(max_b, b);
  std::vector<std::vector<FieldElement>> deriv(spec.n);
  for (int i = 0; i < spec.n; ++i) {
    deriv[i].push_back(prm[i]);
    for (int d = 1; d <= max_b; ++d) deriv[i].push_back(deriv[i].back().partial(0));
  }

  ProductConditionsDeg1 out;
  out.factor_bounds = factor_bounds;
  const int total_bound = tuple_total(factor_bounds);

  auto tuple_sum = [&](const std::vector<int>& t) {
    FieldElement s = tower->zero();
    for (int i = 0; i < spec.n; ++i) {
      FieldElement prod = spec.a[i];
      for (int l = 0; l < spec.p; ++l) prod = prod * deriv[i][t[l]];
      s = s + prod;
    }
    return s;
  };

  out.data_ok = true;
  for (const auto& t : tuples_up_to(factor_bounds)) {
    if (tuple_total(t) >= total_bound) continue;
    FieldElement v = tuple_sum(t);
    if (!v.is_zero()) out.data_ok = false;
    out.data_conditions.emplace_back(t, std::move(v));
  }
  out.main_sum = tuple_sum(factor_bounds);
  out.feasible = out.data_ok && !out.main_sum.is_zero();
  return out;
}

BilinearSystemP2 build_mixed_system_p2(const ProblemSpec& spec, const MultiIndex& bounds1,
                                       const MultiIndex& bounds2) {
  if (spec.p != 2) throw FuneqError("the bilinear system construction handles p = 2");
  const TowerPtr& tower = spec.tower;
  const int k = tower->k();

  BilinearSystemP2 out;
  out.bounds1 = bounds1;
  out.bounds2 = bounds2;

  const std::vector<MultiIndex> js1 = indices_up_to(bounds1);
  const std::vector<MultiIndex> js2 = indices_up_to(bounds2);

  // iterated partials of every parameter up to the bounds
  auto derivatives = [&](Side side, const MultiIndex& bounds) {
    std::vector<std::map<MultiIndex, FieldElement>> per_param(spec.n);
    for (int i = 0; i < spec.n; ++i)
      for (const MultiIndex& d : indices_up_to(bounds))
        per_param[i].emplace(d, spec.params(side)[i].iterated_partial(d));
    return per_param;
  };
  std::map<Side, std::vector<std::map<MultiIndex, FieldElement>>> cache;
  for (Side side : spec.sides()) cache.emplace(side, derivatives(side, bounds1));
  // bounds may differ; cache the larger box per side
  if (bounds1 != bounds2) {
    MultiIndex mx(k);
    for (int j = 0; j < k; ++j) mx[j] = std::max(bounds1[j], bounds2[j]);
    cache.clear();
    for (Side side : spec.sides()) cache.emplace(side, derivatives(side, mx));
  }

  for (const Family& fam : equation_families(spec.mode, 2)) {
    const Side s1 = fam.sides[0], s2 = fam.sides[1];
    for (const MultiIndex& m1 : js1) {
      for (const MultiIndex& m2 : js2) {
        BilinearConstraint con;
        con.side1 = s1;
        con.side2 = s2;
        con.weight = fam.weight;
        con.m1 = m1;
        con.m2 = m2;
        con.is_ctilde_row = total_degree(m1) + total_degree(m2) == 0;
        for (const MultiIndex& j1 : js1) {
          if (!index_leq(m1, j1)) continue;
          BigRat w1(1);
          for (int i = 0; i < k; ++i)
            w1 *= BigRat::from_int(
                binomial(static_cast<unsigned>(j1[i]), static_cast<unsigned>(m1[i])));
          for (const MultiIndex& j2 : js2) {
            if (!index_leq(m2, j2)) continue;
            BigRat w2(1);
            for (int i = 0; i < k; ++i)
              w2 *= BigRat::from_int(
                  binomial(static_cast<unsigned>(j2[i]), static_cast<unsigned>(m2[i])));
            FieldElement sum = tower->zero();
            for (int i = 0; i < spec.n; ++i)
              sum = sum + spec.a[i] * cache.at(s1)[i].at(index_sub(j1, m1)) *
                              cache.at(s2)[i].at(index_sub(j2, m2));
            sum = sum.scaled(w1 * w2 * BigRat(fam.weight));
            if (!sum.is_zero()) con.table.emplace(std::make_pair(j1, j2), std::move(sum));
          }
        }
        out.constraints.push_back(std::move(con));
      }
    }
  }
  return out;
}

FieldElement eval_constraint(const BilinearConstraint& c, const DiffOperator& d1,
                             const DiffOperator& d2) {
  const TowerPtr& tower = d1.tower();
  FieldElement acc = tower->zero();
  for (const auto& [jj, coeff] : c.table) {
    FieldElement c1 = d1.coeff(jj.first);
    if (c1.is_zero()) continue;
    FieldElement c2 = d2.coeff(jj.second);
    if (c2.is_zero()) continue;
    acc = acc + c1 * c2 * coeff;
  }
  return acc;
}

std::pair<bool, FieldElement> verify_product_solution(const ProductGenerator& g,
                                                      const ProblemSpec& spec,
                                                      const std::optional<FieldElement>& expected) {
  const int p = static_cast<int>(g.factors.size());
  const TowerPtr& tower = spec.tower;
  if (p != spec.p) throw FuneqError("candidate factor count does not match the problem degree");

  bool all_identity = true;
  for (const auto& [sigma, d] : g.factors)
    if (!sigma.is_identity()) all_identity = false;

  // per factor and multi-index: sigma_j((D_j)_{m_j}(param_i))
  auto factor_values = [&](int j, Side side) {
    const auto& [sigma, d] = g.factors[j];
    std::map<MultiIndex, std::vector<FieldElement>> vals;  // m -> per-parameter value
    for (const MultiIndex& m : indices_up_to(d.bounds())) {
      DiffOperator dm = derived(d, m);
      std::vector<FieldElement> per(spec.n, tower->zero());
      for (int i = 0; i < spec.n; ++i) {
        FieldElement v = apply(dm, spec.params(side)[i]);
        per[i] = sigma.is_identity() ? v : sigma.apply(v);
      }
      vals.emplace(m, std::move(per));
    }
    return vals;
  };

  std::optional<FieldElement> c_tilde;
  bool ok = true;

  for (const Family& fam : equation_families(spec.mode, p)) {
    std::vector<std::map<MultiIndex, std::vector<FieldElement>>> vals;
    for (int j = 0; j < p; ++j) vals.push_back(factor_values(j, fam.sides[j]));

    // iterate over coefficient tuples (m_1..m_p)
    std::vector<std::vector<MultiIndex>> index_sets;
    for (int j = 0; j < p; ++j) index_sets.push_back(indices_up_to(g.factors[j].second.bounds()));
    std::vector<size_t> pick(p, 0);
    for (;;) {
      int total = 0;
      for (int j = 0; j < p; ++j) total += total_degree(index_sets[j][pick[j]]);
      FieldElement coeff = tower->zero();
      for (int i = 0; i < spec.n; ++i) {
        FieldElement prod = spec.a[i];
        for (int j = 0; j < p; ++j) prod = prod * vals[j].at(index_sets[j][pick[j]])[i];
        coeff = coeff + prod;
      }
      coeff = coeff.scaled(BigRat(fam.weight));
      if (total == 0) {
        if (!c_tilde)
          c_tilde = coeff;
        else if (*c_tilde != coeff)
          ok = false;
      } else if (!coeff.is_zero()) {
        ok = false;
      }
      if (!ok) break;
      int j = p - 1;
      while (j >= 0) {
        if (++pick[j] < index_sets[j].size()) break;
        pick[j] = 0;
        --j;
      }
      if (j < 0) break;
    }
    if (!ok) break;
  }

  if (!c_tilde) c_tilde = tower->zero();
  // a nonzero inhomogeneity is only realizable with identity automorphism parts
  if (ok && !all_identity && !c_tilde->is_zero()) ok = false;
  if (ok && expected && *c_tilde != *expected) ok = false;
  return {ok, ok ? *c_tilde : tower->zero()};
}

}  // namespace funeq
