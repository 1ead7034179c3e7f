#include "funeq/oracle.hpp"

#include <cassert>

#include "funeq/error.hpp"

namespace funeq {

namespace {

// local exact inversion over the rationals; the oracle shares only
// field-tower arithmetic with the solver path
std::vector<std::vector<BigRat>> invert_rational_matrix(std::vector<std::vector<BigRat>> a) {
  const size_t n = a.size();
  std::vector<std::vector<BigRat>> inv(n, std::vector<BigRat>(n, BigRat(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = BigRat(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    assert(piv < n && "falling-factorial grid matrix must be invertible");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    BigRat p = a[col][col].inv();
    for (size_t j = 0; j < n; ++j) {
      a[col][j] *= p;
      inv[col][j] *= p;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col].is_zero()) continue;
      BigRat f = a[i][col];
      for (size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

// direct evaluation of the operator, written independently of apply()
FieldElement eval_operator(const DiffOperator& d, const FieldElement& x) {
  FieldElement acc = x.tower()->zero();
  for (const auto& [m, c] : d.terms()) acc = acc + c * x.iterated_partial(m);
  return acc;
}

std::vector<FieldElement> inverse_weights(const AutoAction& sigma, const ProblemSpec& spec) {
  if (sigma.is_identity()) return spec.a;
  if (!sigma.invertible_on_l)
    throw FuneqError("oracle requires a symbolically invertible automorphism action");
  std::vector<FieldElement> w;
  for (const auto& ai : spec.a) w.push_back(sigma.apply_inverse(ai));
  return w;
}

}  // namespace

bool ResidualProfile::homogeneous() const {
  for (const auto& [m, v] : lambda)
    if (!v.is_zero()) return false;
  return true;
}

bool ResidualProfile::matches(const FieldElement& c_tilde) const {
  for (const auto& [m, v] : lambda) {
    if (total_degree(m) == 0) {
      if (v != c_tilde) return false;
    } else if (!v.is_zero()) {
      return false;
    }
  }
  return true;
}

ResidualProfile residual_profile(const AutoAction& sigma, const DiffOperator& d,
                                 const ProblemSpec& spec, Side side,
                                 const MultiIndex* grid_base) {
  const TowerPtr& tower = spec.tower;
  const int k = tower->k();
  const MultiIndex& bounds = d.bounds();
  std::vector<FieldElement> w = inverse_weights(sigma, spec);
  const auto& params = spec.params(side);

  MultiIndex base(k);
  for (int j = 0; j < k; ++j) {
    base[j] = grid_base ? (*grid_base)[j] : bounds[j] + 1;
    if (base[j] <= bounds[j])
      throw FuneqError("grid base must exceed the operator bounds to keep the grid nonsingular");
  }

  // evaluate g(t^e) / t^e over the grid box e_j in [base_j, base_j + J_j]
  const std::vector<MultiIndex> offsets = indices_up_to(bounds);
  std::vector<FieldElement> values;
  values.reserve(offsets.size());
  for (const MultiIndex& off : offsets) {
    FieldElement x = tower->one();
    for (int j = 0; j < k; ++j) x = x * tower->gen(j).pow(base[j] + off[j]);
    FieldElement g = tower->zero();
    for (int i = 0; i < spec.n; ++i) g = g + w[i] * eval_operator(d, params[i] * x);
    values.push_back(g / x);
  }

  // axis-by-axis falling-factorial inversion; the grid matrix determinant
  // is a Vandermonde determinant, nonzero for distinct exponents
  std::vector<int> strides(k);
  {
    int s = 1;
    for (int j = k - 1; j >= 0; --j) {
      strides[j] = s;
      s *= bounds[j] + 1;
    }
  }
  for (int axis = 0; axis < k; ++axis) {
    const int n = bounds[axis] + 1;
    if (n == 1) {
      // single row: coefficient = value / FF(base, 0) = value
      continue;
    }
    std::vector<std::vector<BigRat>> f(n, std::vector<BigRat>(n));
    for (int r = 0; r < n; ++r)
      for (int m = 0; m < n; ++m)
        f[r][m] = BigRat::from_int(falling_factorial(base[axis] + r, m));
    std::vector<std::vector<BigRat>> finv = invert_rational_matrix(std::move(f));
    // apply the inverse along this axis
    std::vector<FieldElement> next(values.size(), tower->zero());
    const int stride = strides[axis];
    for (size_t idx = 0; idx < values.size(); ++idx) {
      int pos = (static_cast<int>(idx) / stride) % n;  // position along the axis
      size_t base_idx = idx - static_cast<size_t>(pos) * stride;
      FieldElement acc = tower->zero();
      for (int r = 0; r < n; ++r)
        acc = acc + values[base_idx + static_cast<size_t>(r) * stride].scaled(finv[pos][r]);
      next[idx] = acc;
    }
    values = std::move(next);
  }

  ResidualProfile profile;
  profile.side = side;
  profile.bounds = bounds;
  for (size_t i = 0; i < offsets.size(); ++i) {
    // lambda_m = mu_m * t^m
    FieldElement tm = tower->one();
    for (int j = 0; j < k; ++j)
      if (offsets[i][j] != 0) tm = tm * tower->gen(j).pow(offsets[i][j]);
    profile.lambda.emplace(offsets[i], values[i] * tm);
  }
  return profile;
}

bool grid_check_full(const AutoAction& sigma, const DiffOperator& d,
                     const FieldElement& c_tilde, const ProblemSpec& spec, int sample_size) {
  const TowerPtr& tower = spec.tower;
  const int k = tower->k();
  std::vector<FieldElement> w = inverse_weights(sigma, spec);
  FieldElement c_inv = sigma.is_identity() ? c_tilde : sigma.apply_inverse(c_tilde);
  const bool id = sigma.is_identity();

  auto side_sum = [&](Side side, const FieldElement& x) {
    FieldElement s = tower->zero();
    for (int i = 0; i < spec.n; ++i) s = s + w[i] * eval_operator(d, spec.params(side)[i] * x);
    return s;
  };

  MultiIndex box(k, std::max(sample_size - 1, 0));
  std::vector<FieldElement> grid;
  for (const MultiIndex& e : indices_up_to(box)) {
    FieldElement x = tower->one();
    for (int j = 0; j < k; ++j) x = x * tower->gen(j).pow(e[j]);
    grid.push_back(std::move(x));
  }

  if (spec.mode != Mode::full) {
    const Side side = spec.sides().front();
    for (const FieldElement& x : grid) {
      FieldElement rhs = c_inv * (id ? x : sigma.apply_inverse(x));
      if (side_sum(side, x) != rhs) return false;
    }
    return true;
  }
  for (const FieldElement& x : grid) {
    for (const FieldElement& y : grid) {
      FieldElement lhs = side_sum(Side::alpha, x) + side_sum(Side::beta, y);
      FieldElement rhs = id ? c_inv * (x + y)
                            : c_inv * (sigma.apply_inverse(x) + sigma.apply_inverse(y));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

}  // namespace funeq
