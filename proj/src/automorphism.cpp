#include "funeq/automorphism.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "funeq/error.hpp"
#include "funeq/expr.hpp"
#include "funeq/solver_additive.hpp"

namespace funeq {

namespace {

std::vector<std::string> doubled_names(const Tower& tw) {
  std::vector<std::string> names = tw.var_names();
  if (tw.k() == 1) {
    names.push_back("s");
  } else {
    for (int j = 0; j < tw.k(); ++j) names.push_back("s" + std::to_string(j + 1));
  }
  return names;
}

MultiPoly embed_poly(const MultiPoly& p, int total, int offset) {
  MultiPoly out(total);
  for (const auto& [e, c] : p.terms()) {
    std::vector<int> e2(total, 0);
    for (size_t i = 0; i < e.size(); ++i) e2[offset + i] = e[i];
    out.add_term(e2, c);
  }
  return out;
}

RatFunc embed_ratfunc(const RatFunc& r, int total, int offset) {
  return RatFunc(embed_poly(r.num(), total, offset), embed_poly(r.den(), total, offset));
}

// cleared-denominator polynomial of sum a_i param_i(s)
MultiPoly side_char_poly(const ProblemSpec& spec, Side side, int total) {
  const int k = spec.tower->k();
  RatFunc sum(total);
  for (int i = 0; i < spec.n; ++i) {
    RatFunc ai = embed_ratfunc(spec.a[i].coord(0), total, 0);
    RatFunc pi = embed_ratfunc(spec.params(side)[i].coord(0), total, k);
    sum = sum + ai * pi;
  }
  return sum.num().normalized_primitive();
}

// ---- rational root finding for the ansatz reduction ----

// univariate polynomial as degree -> coefficient
using UniPoly = std::map<int, BigRat>;

std::vector<BigInt> small_divisors(const BigInt& n, bool& complete) {
  // trial division; complete only when the cofactor is fully factored
  complete = true;
  std::vector<BigInt> primes;
  std::vector<int> mult;
  BigInt m = n.abs();
  assert(!m.is_zero());
  for (long long d = 2; d <= 1000000; ++d) {
    BigInt dd(d);
    if (m < dd * dd) break;
    BigInt q, r;
    for (;;) {
      BigInt::divmod(m, dd, q, r);
      if (!r.is_zero()) break;
      if (!primes.empty() && primes.back() == dd) {
        ++mult.back();
      } else {
        primes.push_back(dd);
        mult.push_back(1);
      }
      m = q;
    }
  }
  if (m != BigInt(1)) {
    if (m.fits_int64() && m.to_int64() <= 1000000000000ll) {
      primes.push_back(m);
      mult.push_back(1);
    } else {
      complete = false;  // huge prime cofactor: divisors incomplete
    }
  }
  std::vector<BigInt> divs{BigInt(1)};
  for (size_t i = 0; i < primes.size(); ++i) {
    size_t base = divs.size();
    BigInt pw(1);
    for (int e = 1; e <= mult[i]; ++e) {
      pw *= primes[i];
      for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pw);
    }
  }
  std::sort(divs.begin(), divs.end());
  divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
  return divs;
}

BigRat eval_unipoly(const UniPoly& p, const BigRat& x) {
  BigRat acc(0);
  for (const auto& [d, c] : p) acc += c * x.pow(d);
  return acc;
}

// nonzero rational roots; sets incomplete when divisor enumeration gave up
std::vector<BigRat> rational_roots(UniPoly p, bool& incomplete) {
  incomplete = false;
  std::vector<BigRat> roots;
  // strip the q^v factor (0 is never an admissible image scalar)
  int v = p.empty() ? 0 : p.begin()->first;
  if (!p.empty() && v > 0) {
    UniPoly q;
    for (const auto& [d, c] : p) q[d - v] = c;
    p = std::move(q);
  }
  if (p.empty()) return roots;  // identically zero handled by the caller
  // clear denominators to integer coefficients
  BigInt lcm(1);
  for (const auto& [d, c] : p) lcm = lcm / BigInt::gcd(lcm, c.den()) * c.den();
  std::map<int, BigInt> ip;
  for (const auto& [d, c] : p) ip[d] = c.num() * (lcm / c.den());
  const BigInt& trailing = ip.begin()->second;
  const BigInt& leading = ip.rbegin()->second;
  bool c1 = false, c2 = false;
  std::vector<BigInt> ps = small_divisors(trailing, c1);
  std::vector<BigInt> qs = small_divisors(leading, c2);
  if (!c1 || !c2) incomplete = true;
  for (const BigInt& pp : ps) {
    for (const BigInt& qq : qs) {
      for (int sign : {1, -1}) {
        BigRat cand(sign > 0 ? pp : -pp, qq);
        if (eval_unipoly(p, cand).is_zero()) roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

// ---- polynomial system in the ansatz scalars q_1..q_k ----

using QPoly = std::map<std::vector<int>, BigRat>;  // q-exponent -> coefficient

QPoly substitute_assigned(const QPoly& p, const std::vector<std::optional<BigRat>>& assign) {
  QPoly out;
  for (const auto& [e, c] : p) {
    BigRat coeff = c;
    std::vector<int> e2(e.size(), 0);
    for (size_t j = 0; j < e.size(); ++j) {
      if (assign[j]) {
        coeff *= assign[j]->pow(e[j]);
      } else {
        e2[j] = e[j];
      }
    }
    if (coeff.is_zero()) continue;
    auto it = out.find(e2);
    if (it == out.end())
      out.emplace(std::move(e2), coeff);
    else {
      it->second += coeff;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

// index of the only variable present, or -1; assigned scalars never appear
// because substitute_assigned zeroed their exponents
int single_unassigned_var(const QPoly& p) {
  int var = -1;
  for (const auto& [e, c] : p) {
    for (size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      if (var == -1)
        var = static_cast<int>(j);
      else if (var != static_cast<int>(j))
        return -1;
    }
  }
  return var;
}

void solve_q_system(const std::vector<QPoly>& eqs, std::vector<std::optional<BigRat>> assign,
                    std::vector<std::vector<BigRat>>& solutions, std::vector<std::string>& notes,
                    int depth) {
  if (depth > 16 || solutions.size() > 256) return;
  std::vector<QPoly> cur;
  for (const auto& e : eqs) {
    QPoly s = substitute_assigned(e, assign);
    if (s.empty()) continue;
    if (s.size() == 1 && std::all_of(s.begin()->first.begin(), s.begin()->first.end(),
                                     [](int x) { return x == 0; }))
      return;  // nonzero constant: dead branch
    cur.push_back(std::move(s));
  }
  if (cur.empty()) {
    // every remaining scalar is unconstrained: not an isolated root family
    for (const auto& a : assign)
      if (!a) {
        notes.push_back("ansatz leaves a free scalar; family skipped");
        return;
      }
    std::vector<BigRat> sol;
    for (const auto& a : assign) sol.push_back(*a);
    solutions.push_back(std::move(sol));
    return;
  }
  // pick an equation univariate in one unassigned scalar
  for (const auto& e : cur) {
    int var = single_unassigned_var(e);
    if (var < 0) continue;
    UniPoly up;
    for (const auto& [expo, c] : e) up[expo[var]] = c;
    bool incomplete = false;
    std::vector<BigRat> roots = rational_roots(up, incomplete);
    if (incomplete) notes.push_back("rational-root enumeration incomplete (large coefficients)");
    for (const BigRat& r : roots) {
      if (r.is_zero()) continue;
      auto next = assign;
      next[var] = r;
      solve_q_system(eqs, std::move(next), solutions, notes, depth + 1);
    }
    return;
  }
  notes.push_back("ansatz system is not triangular; family skipped");
}

// divide f by g in K[t, s] as long as the division is exact
MultiPoly deflate(MultiPoly f, const MultiPoly& g, int& count) {
  for (;;) {
    try {
      MultiPoly q = MultiPoly::divide_exact(f, g);
      f = std::move(q);
      ++count;
    } catch (const FuneqError&) {
      return f;
    }
  }
}

}  // namespace

std::vector<const MultiPoly*> CharEquation::active_polys() const {
  std::vector<const MultiPoly*> out;
  if (alpha_poly) out.push_back(&*alpha_poly);
  if (beta_poly) out.push_back(&*beta_poly);
  return out;
}

std::string CharEquation::to_string() const {
  std::string out;
  for (const MultiPoly* p : active_polys()) {
    if (!out.empty()) out += " ; ";
    out += p->to_string(s_tower->var_names());
  }
  return out;
}

CharEquationResult char_equation(const ProblemSpec& spec) {
  CharEquationResult result;
  for (int i = 0; i < spec.n; ++i) {
    if (!spec.a[i].in_base_field()) {
      result.note = "characteristic equation requires coefficients in the base field";
      return result;
    }
  }
  for (Side side : spec.sides()) {
    for (const auto& prm : spec.params(side)) {
      if (!prm.in_base_field()) {
        result.note = "characteristic equation requires parameters in the base field";
        return result;
      }
    }
    if (!spec.data_sum(side, MultiIndex(spec.tower->k(), 0)).is_zero()) {
      result.note = std::string("inhomogeneous side: sum a_i ") +
                    (side == Side::alpha ? "alpha_i" : "beta_i") +
                    " != 0, exponentials are covered by the identity shortcut";
      return result;
    }
  }

  const int k = spec.tower->k();
  const int total = 2 * k;
  CharEquation eq;
  eq.s_tower = Tower::make(doubled_names(*spec.tower));
  if (spec.mode != Mode::beta_only) eq.alpha_poly = side_char_poly(spec, Side::alpha, total);
  if (spec.mode != Mode::alpha_only) eq.beta_poly = side_char_poly(spec, Side::beta, total);
  result.equation = std::move(eq);
  return result;
}

RootSearchResult find_roots_monomial(const CharEquation& eq, const ProblemSpec& spec, int cap) {
  RootSearchResult result;
  const int k = spec.tower->k();

  std::vector<MultiPoly> polys;
  for (const MultiPoly* p : eq.active_polys()) polys.push_back(*p);
  if (polys.empty()) return result;

  // enumerate exponent matrices rowwise in [-cap, cap]^k
  const long long row_count_ll = [&] {
    long long c = 1;
    for (int i = 0; i < k; ++i) c *= (2 * cap + 1);
    return c;
  }();
  std::vector<std::vector<int>> row_choices;
  for (long long idx = 0; idx < row_count_ll; ++idx) {
    long long rest = idx;
    std::vector<int> row(k);
    for (int i = 0; i < k; ++i) {
      row[i] = static_cast<int>(rest % (2 * cap + 1)) - cap;
      rest /= (2 * cap + 1);
    }
    row_choices.push_back(std::move(row));
  }

  double matrices = 1;
  for (int j = 0; j < k; ++j) matrices *= static_cast<double>(row_choices.size());
  bool diagonal_only = matrices > 100000.0;
  if (diagonal_only)
    result.notes.push_back("ansatz space too large; restricted to diagonal exponent matrices");

  std::set<std::string> seen;
  std::vector<AutoAction> found;

  // the identity is a root whenever the homogeneous condition holds; seed it
  // so coupled scalar systems the branch solver skips cannot lose it
  if (cap >= 1) {
    AutoAction idact = AutoAction::identity_action(spec.tower);
    if (verify_action(idact, spec) && seen.insert(idact.key()).second)
      found.push_back(std::move(idact));
  }

  std::vector<int> pick(k, 0);
  for (;;) {
    // assemble the exponent matrix
    std::vector<std::vector<int>> emat(k);
    bool skip = false;
    for (int j = 0; j < k; ++j) {
      emat[j] = row_choices[pick[j]];
      if (diagonal_only) {
        for (int i = 0; i < k; ++i)
          if (i != j && emat[j][i] != 0) skip = true;
      }
    }
    if (!skip) {
      // integral determinant check for algebraic independence
      std::vector<std::vector<BigRat>> m(k, std::vector<BigRat>(k));
      for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i) m[j][i] = BigRat(emat[j][i]);
      BigRat det(0);
      {
        // small k: expansion via elimination
        auto a = m;
        det = BigRat(1);
        for (int col = 0; col < k; ++col) {
          int piv = col;
          while (piv < k && a[piv][col].is_zero()) ++piv;
          if (piv == k) {
            det = BigRat(0);
            break;
          }
          if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
          }
          det *= a[col][col];
          for (int i = col + 1; i < k; ++i) {
            if (a[i][col].is_zero()) continue;
            BigRat f = a[i][col] / a[col][col];
            for (int j2 = col; j2 < k; ++j2) a[i][j2] -= f * a[col][j2];
          }
        }
      }
      if (!det.is_zero()) {
        // build the q-polynomial system from every active characteristic poly
        std::vector<QPoly> eqs;
        std::map<std::vector<int>, QPoly> grouped;
        for (const MultiPoly& poly : polys) {
          grouped.clear();
          for (const auto& [e, c] : poly.terms()) {
            std::vector<int> texpo(e.begin(), e.begin() + k);
            std::vector<int> qexpo(e.begin() + k, e.end());
            for (int j = 0; j < k; ++j)
              for (int i = 0; i < k; ++i) texpo[i] += qexpo[j] * emat[j][i];
            QPoly& qp = grouped[texpo];
            auto it = qp.find(qexpo);
            if (it == qp.end())
              qp.emplace(qexpo, c);
            else {
              it->second += c;
              if (it->second.is_zero()) qp.erase(it);
            }
          }
          for (auto& [te, qp] : grouped)
            if (!qp.empty()) eqs.push_back(std::move(qp));
        }
        std::vector<std::vector<BigRat>> solutions;
        solve_q_system(eqs, std::vector<std::optional<BigRat>>(k), solutions, result.notes, 0);
        for (const auto& q : solutions) {
          std::vector<FieldElement> images;
          for (int j = 0; j < k; ++j) {
            FieldElement img = spec.tower->one();
            for (int i = 0; i < k; ++i)
              if (emat[j][i] != 0) img = img * spec.tower->gen(i).pow(emat[j][i]);
            images.push_back(img.scaled(q[j]));
          }
          try {
            AutoAction action = AutoAction::make(
                spec.tower, std::move(images),
                spec.tower->has_extension() ? std::optional<FieldElement>(spec.tower->u())
                                            : std::nullopt,
                AutoAction::Provenance::monomial_ansatz);
            if (action.is_identity()) action.provenance = AutoAction::Provenance::identity;
            if (!verify_action(action, spec)) continue;
            if (seen.insert(action.key()).second) found.push_back(std::move(action));
          } catch (const FuneqError& err) {
            result.notes.push_back(std::string("candidate skipped: ") + err.what());
          }
        }
      }
    }
    // next matrix
    int j = k - 1;
    while (j >= 0) {
      if (++pick[j] < static_cast<int>(row_choices.size())) break;
      pick[j] = 0;
      --j;
    }
    if (j < 0) break;
  }

  std::sort(found.begin(), found.end(), [](const AutoAction& x, const AutoAction& y) {
    bool xi = x.provenance == AutoAction::Provenance::identity;
    bool yi = y.provenance == AutoAction::Provenance::identity;
    if (xi != yi) return xi;
    return x.key() < y.key();
  });
  result.actions = std::move(found);

  // the same remark can surface once per exponent matrix
  std::set<std::string> seen_notes;
  std::vector<std::string> unique_notes;
  for (auto& n : result.notes)
    if (seen_notes.insert(n).second) unique_notes.push_back(std::move(n));
  result.notes = std::move(unique_notes);

  // k = 1: deflate by the found linear factors and report the residual
  if (k == 1) {
    MultiPoly residual = polys.front();  // variables (t, s)
    if (residual.is_zero()) {
      result.notes.push_back(
          "characteristic equation is identically zero: every image satisfies this side");
      return result;
    }
    if (!residual.is_zero()) {
      int min_s = residual.degree_in(1);
      for (const auto& [e, c] : residual.terms()) min_s = std::min(min_s, e[1]);
      if (min_s > 0) {
        residual = MultiPoly::divide_exact(residual, MultiPoly::monomial(2, {0, min_s}, BigRat(1)));
        result.notes.push_back("root s = 0 excluded (not an automorphism image)");
      }
    }
    for (const AutoAction& action : result.actions) {
      auto mono = as_monomial(action.t_images[0]);
      if (!mono) continue;
      int e = mono->second[0];
      // factor: s - q t^e (e >= 0) or t^{-e} s - q (e < 0)
      MultiPoly factor(2);
      if (e >= 0) {
        factor.add_term({0, 1}, BigRat(1));
        factor.add_term({e, 0}, -mono->first);
      } else {
        factor.add_term({-e, 1}, BigRat(1));
        factor.add_term({0, 0}, -mono->first);
      }
      int count = 0;
      residual = deflate(residual, factor, count);
    }
    if (!residual.is_zero() && residual.degree_in(1) > 0) {
      result.notes.push_back("unresolved factor (root family not enumerated): " +
                             residual.to_string(eq.s_tower->var_names()));
    } else {
      result.notes.push_back("all characteristic roots are monomial");
    }
  } else {
    result.notes.push_back(
        "root families beyond the monomial ansatz are not enumerated (possibly transcendental): " +
        eq.to_string());
  }
  return result;
}

bool verify_action(const AutoAction& sigma, const ProblemSpec& spec, std::string* diag) {
  try {
    for (Side side : spec.sides()) {
      FieldElement sum = spec.tower->zero();
      for (int i = 0; i < spec.n; ++i)
        sum = sum + spec.a[i] * sigma.apply(spec.params(side)[i]);
      if (!sum.is_zero()) {
        if (diag)
          *diag = std::string("sum a_i sigma(") + (side == Side::alpha ? "alpha" : "beta") +
                  "_i) = " + print_element(sum);
        return false;
      }
    }
  } catch (const SingularSubstitution& err) {
    if (diag) *diag = err.what();
    return false;
  }
  return true;
}

OperatorKernelResult homogeneous_operator_kernel(const AutoAction& sigma, const ProblemSpec& spec,
                                                 const MultiIndex& bounds) {
  OperatorKernelResult result;
  if (!sigma.invertible_on_l) {
    result.note = "kernel skipped: action is not symbolically invertible on L";
    return result;
  }
  std::vector<FieldElement> weights;
  try {
    for (const auto& ai : spec.a) weights.push_back(sigma.apply_inverse(ai));
  } catch (const SingularSubstitution& err) {
    result.note = std::string("kernel skipped: ") + err.what();
    return result;
  }
  LinearSystem system = build_system_weighted(spec, weights, bounds, /*inhomogeneous=*/false);
  LinearSolveResult sol = solve(system);
  result.computed = true;
  for (const auto& vec : sol.kernel)
    result.kernel.push_back(operator_from_assignment(spec.tower, bounds, system.columns, vec));
  return result;
}

}  // namespace funeq
