#include "funeq/diffop.hpp"

#include <cassert>

#include "funeq/auto_action.hpp"
#include "funeq/error.hpp"

namespace funeq {

int total_degree(const MultiIndex& m) {
  int s = 0;
  for (int x : m) s += x;
  return s;
}

bool index_leq(const MultiIndex& a, const MultiIndex& b) {
  assert(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

MultiIndex index_sub(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

MultiIndex index_add(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

std::vector<MultiIndex> indices_up_to(const MultiIndex& bounds) {
  std::vector<MultiIndex> out;
  MultiIndex cur(bounds.size(), 0);
  for (;;) {
    out.push_back(cur);
    int i = static_cast<int>(bounds.size()) - 1;
    while (i >= 0) {
      if (cur[i] < bounds[i]) {
        ++cur[i];
        for (size_t j = i + 1; j < cur.size(); ++j) cur[j] = 0;
        break;
      }
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

DiffOperator::DiffOperator(TowerPtr tower, MultiIndex bounds)
    : tower_(std::move(tower)), bounds_(std::move(bounds)) {
  if (static_cast<int>(bounds_.size()) != tower_->k())
    throw FuneqError("operator bounds length does not match the tower");
  for (int b : bounds_)
    if (b < 0) throw FuneqError("operator bounds must be nonnegative");
}

int DiffOperator::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
  return d;
}

FieldElement DiffOperator::coeff(const MultiIndex& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? tower_->zero() : it->second;
}

void DiffOperator::set_coeff(MultiIndex m, FieldElement c) {
  if (m.size() != bounds_.size()) throw FuneqError("multi-index length mismatch");
  if (!index_leq(m, bounds_)) throw FuneqError("multi-index exceeds operator bounds");
  if (c.is_zero())
    terms_.erase(m);
  else
    terms_[std::move(m)] = std::move(c);
}

DiffOperator DiffOperator::operator+(const DiffOperator& o) const {
  if (!Tower::same(tower_, o.tower_)) throw TowerMismatch();
  MultiIndex b(bounds_.size());
  for (size_t i = 0; i < b.size(); ++i) b[i] = std::max(bounds_[i], o.bounds_[i]);
  DiffOperator r(tower_, std::move(b));
  for (const auto& [m, c] : terms_) r.set_coeff(m, c);
  for (const auto& [m, c] : o.terms_) r.set_coeff(m, r.coeff(m) + c);
  return r;
}

DiffOperator DiffOperator::scaled(const FieldElement& c) const {
  DiffOperator r(tower_, bounds_);
  for (const auto& [m, v] : terms_) r.set_coeff(m, v * c);
  return r;
}

bool DiffOperator::operator==(const DiffOperator& o) const {
  if (!Tower::same(tower_, o.tower_)) return false;
  return terms_ == o.terms_;
}

DiffOperator DiffOperator::identity(const TowerPtr& tower) {
  DiffOperator d(tower, MultiIndex(tower->k(), 0));
  d.set_coeff(MultiIndex(tower->k(), 0), tower->one());
  return d;
}

FieldElement apply(const DiffOperator& d, const FieldElement& x) {
  if (!Tower::same(d.tower(), x.tower())) throw TowerMismatch();
  FieldElement acc = d.tower()->zero();
  for (const auto& [m, c] : d.terms()) acc = acc + c * x.iterated_partial(m);
  return acc;
}

DiffOperator derived(const DiffOperator& d, const MultiIndex& m) {
  if (m.size() != d.bounds().size()) throw FuneqError("multi-index length mismatch");
  MultiIndex b(d.bounds().size());
  for (size_t i = 0; i < b.size(); ++i) b[i] = std::max(d.bounds()[i] - m[i], 0);
  DiffOperator r(d.tower(), std::move(b));
  for (const auto& [j, c] : d.terms()) {
    if (!index_leq(m, j)) continue;
    BigRat w(1);
    for (size_t i = 0; i < m.size(); ++i)
      w *= BigRat::from_int(binomial(static_cast<unsigned>(j[i]), static_cast<unsigned>(m[i])));
    MultiIndex jm = index_sub(j, m);
    r.set_coeff(jm, r.coeff(jm) + c.scaled(w));
  }
  return r;
}

FieldElement leibniz_product(const DiffOperator& d, const FieldElement& x,
                             const FieldElement& y) {
  if (!Tower::same(d.tower(), x.tower()) || !Tower::same(d.tower(), y.tower()))
    throw TowerMismatch();
  FieldElement acc = d.tower()->zero();
  for (const MultiIndex& m : indices_up_to(d.bounds())) {
    DiffOperator dm = derived(d, m);
    if (dm.is_zero()) continue;
    acc = acc + apply(dm, x) * y.iterated_partial(m);
  }
  return acc;
}

DiffOperator act_automorphism(const DiffOperator& d, const AutoAction& sigma) {
  DiffOperator r(d.tower(), d.bounds());
  for (const auto& [m, c] : d.terms()) r.set_coeff(m, sigma.apply(c));
  return r;
}

}  // namespace funeq
