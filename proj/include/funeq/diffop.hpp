#pragma once

#include <map>
#include <vector>

#include "funeq/tower.hpp"

namespace funeq {

struct AutoAction;

// multi-index (j_1..j_k) of partial-derivative exponents
using MultiIndex = std::vector<int>;

int total_degree(const MultiIndex& m);
bool index_leq(const MultiIndex& a, const MultiIndex& b);  // componentwise
MultiIndex index_sub(const MultiIndex& a, const MultiIndex& b);
MultiIndex index_add(const MultiIndex& a, const MultiIndex& b);
// all indices 0 <= j <= bounds, lexicographic ascending
std::vector<MultiIndex> indices_up_to(const MultiIndex& bounds);

// Differential operator sum c_m d^m as a sparse multi-index -> coefficient
// table with explicit bounds. Coefficients live in the tower, zero
// coefficients are never stored.
class DiffOperator {
 public:
  DiffOperator(TowerPtr tower, MultiIndex bounds);

  const TowerPtr& tower() const { return tower_; }
  const MultiIndex& bounds() const { return bounds_; }
  const std::map<MultiIndex, FieldElement>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // max total degree of stored indices, 0 when empty

  FieldElement coeff(const MultiIndex& m) const;
  void set_coeff(MultiIndex m, FieldElement c);  // drops zeros, checks bounds

  DiffOperator operator+(const DiffOperator& o) const;
  DiffOperator scaled(const FieldElement& c) const;

  bool operator==(const DiffOperator& o) const;

  static DiffOperator identity(const TowerPtr& tower);  // c_0 = 1, bounds 0

 private:
  TowerPtr tower_;
  MultiIndex bounds_;
  std::map<MultiIndex, FieldElement> terms_;
};

// D applied to a field element: sum c_m iterated_partial(m, x)
FieldElement apply(const DiffOperator& d, const FieldElement& x);

// derived operator D_m = sum_{j >= m} c_j prod binom(j_i, m_i) d^{j-m}
DiffOperator derived(const DiffOperator& d, const MultiIndex& m);

// sum_m apply(derived(D,m), x) * iterated_partial(m, y); equals D(x*y)
FieldElement leibniz_product(const DiffOperator& d, const FieldElement& x,
                             const FieldElement& y);

// coefficient-wise action of an automorphism
DiffOperator act_automorphism(const DiffOperator& d, const AutoAction& sigma);

}  // namespace funeq
