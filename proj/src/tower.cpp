#include "funeq/tower.hpp"

#include <algorithm>
#include <cassert>

#include "funeq/error.hpp"

namespace funeq {

namespace {

// solve the m x m linear system A x = b over the rational-function field
std::optional<std::vector<RatFunc>> solve_ratfunc_system(std::vector<std::vector<RatFunc>> a,
                                                         std::vector<RatFunc> b) {
  const size_t m = b.size();
  for (size_t col = 0, row = 0; col < m && row < m; ++col) {
    size_t piv = row;
    while (piv < m && a[piv][col].is_zero()) ++piv;
    if (piv == m) return std::nullopt;  // singular
    std::swap(a[piv], a[row]);
    std::swap(b[piv], b[row]);
    RatFunc inv_p = a[row][col].inv();
    for (size_t j = col; j < m; ++j) a[row][j] = a[row][j] * inv_p;
    b[row] = b[row] * inv_p;
    for (size_t i = 0; i < m; ++i) {
      if (i == row || a[i][col].is_zero()) continue;
      RatFunc f = a[i][col];
      for (size_t j = col; j < m; ++j) a[i][j] = a[i][j] - f * a[row][j];
      b[i] = b[i] - f * b[row];
    }
    ++row;
  }
  return b;
}

}  // namespace

std::shared_ptr<const Tower> Tower::make(std::vector<std::string> var_names) {
  if (var_names.empty()) throw FuneqError("a tower needs at least one transcendental generator");
  auto t = std::shared_ptr<Tower>(new Tower());
  t->var_names_ = std::move(var_names);
  t->ext_degree_ = 1;
  t->init();
  return t;
}

std::shared_ptr<const Tower> Tower::make(std::vector<std::string> var_names,
                                         std::string u_name,
                                         std::vector<RatFunc> minpoly_tail) {
  if (var_names.empty()) throw FuneqError("a tower needs at least one transcendental generator");
  if (minpoly_tail.empty()) throw FuneqError("extension requires a minimal polynomial");
  auto t = std::shared_ptr<Tower>(new Tower());
  t->var_names_ = std::move(var_names);
  t->u_name_ = std::move(u_name);
  t->ext_degree_ = static_cast<int>(minpoly_tail.size());
  t->minpoly_tail_ = std::move(minpoly_tail);
  for (const auto& r : t->minpoly_tail_)
    if (r.nvars() != t->k()) throw FuneqError("minimal polynomial coefficient has wrong variable count");
  t->init();
  return t;
}

void Tower::init() {
  du_.assign(std::max(k(), 1), std::nullopt);
  if (ext_degree_ == 1) return;

  const int m = ext_degree_;
  const int kk = k();
  // u^m = -(r_0 + r_1 u + ... + r_{m-1} u^{m-1}); extend to u^{2m-2}
  std::vector<RatFunc> um(m, RatFunc(kk));
  for (int l = 0; l < m; ++l) um[l] = -minpoly_tail_[l];
  upow_.push_back(um);
  for (int i = 1; i <= m - 2; ++i) {
    const std::vector<RatFunc>& prev = upow_.back();
    std::vector<RatFunc> next(m, RatFunc(kk));
    // multiply by u: shift, then reduce the overflowing u^m term
    for (int l = 0; l + 1 < m; ++l) next[l + 1] = prev[l];
    const RatFunc& top = prev[m - 1];
    if (!top.is_zero())
      for (int l = 0; l < m; ++l) next[l] = next[l] + top * upow_[0][l];
    upow_.push_back(std::move(next));
  }

  // m'(u) = m u^{m-1} + sum_{l>=1} l r_l u^{l-1}
  std::vector<RatFunc> dm(m, RatFunc(kk));
  dm[m - 1] = RatFunc::constant(kk, BigRat(m));
  for (int l = 1; l < m; ++l)
    dm[l - 1] = dm[l - 1] + minpoly_tail_[l] * RatFunc::constant(kk, BigRat(l));
  FieldElement mprime = from_coords(dm);

  // invert m'(u): solve mprime * y = 1 coordinatewise
  std::vector<std::vector<RatFunc>> a(m, std::vector<RatFunc>(m, RatFunc(kk)));
  for (int col = 0; col < m; ++col) {
    std::vector<RatFunc> basis(m, RatFunc(kk));
    basis[col] = RatFunc::constant(kk, BigRat(1));
    FieldElement prod = mprime * from_coords(basis);
    for (int rowi = 0; rowi < m; ++rowi) a[rowi][col] = prod.coord(rowi);
  }
  std::vector<RatFunc> rhs(m, RatFunc(kk));
  rhs[0] = RatFunc::constant(kk, BigRat(1));
  auto inv_coords = solve_ratfunc_system(a, rhs);
  if (!inv_coords) {
    du_error_ = "inseparable extension: m'(u) is not invertible modulo the minimal polynomial";
  } else {
    FieldElement inv_mprime = from_coords(*inv_coords);
    for (int j = 0; j < kk; ++j) {
      // (m'(u)) du = -(sum_l (d_j r_l) u^l)
      std::vector<RatFunc> s(m, RatFunc(kk));
      for (int l = 0; l < m; ++l) s[l] = minpoly_tail_[l].partial(j);
      du_[j] = (-(from_coords(s) * inv_mprime)).coords();
    }
  }

  // advisory trial-root irreducibility probe for small degrees
  if (m <= 3) {
    std::vector<FieldElement> candidates;
    for (long long q : {0ll, 1ll, -1ll, 2ll, -2ll}) candidates.push_back(from_rational(BigRat(q)));
    candidates.push_back(from_rational(BigRat(BigInt(1), BigInt(2))));
    candidates.push_back(from_rational(BigRat(BigInt(-1), BigInt(2))));
    for (int j = 0; j < kk; ++j) {
      candidates.push_back(gen(j));
      candidates.push_back(-gen(j));
    }
    for (const auto& cand : candidates) {
      // evaluate u^m + r_{m-1}u^{m-1} + ... + r_0 at cand within the base field
      FieldElement val = cand.pow(m);
      for (int l = 0; l < m; ++l) val = val + from_ratfunc(minpoly_tail_[l]) * cand.pow(l);
      if (val.is_zero()) {
        minpoly_warnings_.push_back("minimal polynomial has the root " +
                                    cand.coord(0).to_string(var_names_) +
                                    " in the base field; the extension is not a field");
        break;
      }
    }
  }
}

FieldElement Tower::zero() const {
  std::vector<RatFunc> coords(ext_degree_, RatFunc(k()));
  return FieldElement(shared_from_this(), std::move(coords));
}

FieldElement Tower::one() const { return from_rational(BigRat(1)); }

FieldElement Tower::from_rational(const BigRat& c) const {
  return from_ratfunc(RatFunc::constant(k(), c));
}

FieldElement Tower::from_ratfunc(const RatFunc& r) const {
  if (r.nvars() != k()) throw FuneqError("rational function has wrong variable count");
  std::vector<RatFunc> coords(ext_degree_, RatFunc(k()));
  coords[0] = r;
  return FieldElement(shared_from_this(), std::move(coords));
}

FieldElement Tower::from_coords(std::vector<RatFunc> coords) const {
  if (static_cast<int>(coords.size()) != ext_degree_)
    throw FuneqError("coordinate vector has wrong length");
  return FieldElement(shared_from_this(), std::move(coords));
}

FieldElement Tower::gen(int j) const {
  if (j < 0 || j >= k()) throw FuneqError("generator index out of range");
  return from_ratfunc(RatFunc::variable(k(), j));
}

FieldElement Tower::u() const {
  if (!has_extension()) throw FuneqError("tower has no algebraic generator");
  std::vector<RatFunc> coords(ext_degree_, RatFunc(k()));
  coords[1] = RatFunc::constant(k(), BigRat(1));
  return FieldElement(shared_from_this(), std::move(coords));
}

bool Tower::same(const TowerPtr& a, const TowerPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->var_names_ == b->var_names_ && a->u_name_ == b->u_name_ &&
         a->ext_degree_ == b->ext_degree_ && a->minpoly_tail_ == b->minpoly_tail_;
}

FieldElement::FieldElement(TowerPtr tower, std::vector<RatFunc> coords)
    : tower_(std::move(tower)), coords_(std::move(coords)) {
  assert(tower_ && static_cast<int>(coords_.size()) == tower_->ext_degree());
}

void FieldElement::check_same_tower(const FieldElement& o) const {
  if (!Tower::same(tower_, o.tower_)) throw TowerMismatch();
}

bool FieldElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const RatFunc& r) { return r.is_zero(); });
}

bool FieldElement::is_one() const {
  if (!coords_[0].is_one()) return false;
  for (size_t l = 1; l < coords_.size(); ++l)
    if (!coords_[l].is_zero()) return false;
  return true;
}

bool FieldElement::in_base_field() const {
  for (size_t l = 1; l < coords_.size(); ++l)
    if (!coords_[l].is_zero()) return false;
  return true;
}

bool FieldElement::is_rational_constant() const {
  return in_base_field() && coords_[0].is_constant();
}

BigRat FieldElement::rational_value() const {
  assert(is_rational_constant());
  return coords_[0].constant_value();
}

FieldElement FieldElement::operator-() const {
  std::vector<RatFunc> coords;
  coords.reserve(coords_.size());
  for (const auto& c : coords_) coords.push_back(-c);
  return FieldElement(tower_, std::move(coords));
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same_tower(o);
  std::vector<RatFunc> coords;
  coords.reserve(coords_.size());
  for (size_t l = 0; l < coords_.size(); ++l) coords.push_back(coords_[l] + o.coords_[l]);
  return FieldElement(tower_, std::move(coords));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same_tower(o);
  std::vector<RatFunc> coords;
  coords.reserve(coords_.size());
  for (size_t l = 0; l < coords_.size(); ++l) coords.push_back(coords_[l] - o.coords_[l]);
  return FieldElement(tower_, std::move(coords));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same_tower(o);
  const int m = static_cast<int>(coords_.size());
  const int kk = tower_->k();
  if (m == 1) {
    return FieldElement(tower_, {coords_[0] * o.coords_[0]});
  }
  // convolution up to degree 2m-2, then reduce via the cached u powers
  std::vector<RatFunc> conv(2 * m - 1, RatFunc(kk));
  for (int i = 0; i < m; ++i) {
    if (coords_[i].is_zero()) continue;
    for (int j = 0; j < m; ++j) {
      if (o.coords_[j].is_zero()) continue;
      conv[i + j] = conv[i + j] + coords_[i] * o.coords_[j];
    }
  }
  std::vector<RatFunc> out(conv.begin(), conv.begin() + m);
  const auto& upow = tower_->upow();
  for (int d = m; d <= 2 * m - 2; ++d) {
    if (conv[d].is_zero()) continue;
    const auto& rep = upow[d - m];
    for (int l = 0; l < m; ++l) out[l] = out[l] + conv[d] * rep[l];
  }
  return FieldElement(tower_, std::move(out));
}

FieldElement FieldElement::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero field element");
  const int m = static_cast<int>(coords_.size());
  if (m == 1) return FieldElement(tower_, {coords_[0].inv()});
  const int kk = tower_->k();
  // solve (this) * y = 1 in the power basis
  std::vector<std::vector<RatFunc>> a(m, std::vector<RatFunc>(m, RatFunc(kk)));
  for (int col = 0; col < m; ++col) {
    std::vector<RatFunc> basis(m, RatFunc(kk));
    basis[col] = RatFunc::constant(kk, BigRat(1));
    FieldElement prod = *this * FieldElement(tower_, std::move(basis));
    for (int row = 0; row < m; ++row) a[row][col] = prod.coord(row);
  }
  std::vector<RatFunc> rhs(m, RatFunc(kk));
  rhs[0] = RatFunc::constant(kk, BigRat(1));
  auto sol = solve_ratfunc_system(std::move(a), std::move(rhs));
  if (!sol)
    throw DivisionByZero("element is a zero divisor (is the minimal polynomial irreducible?)");
  return FieldElement(tower_, std::move(*sol));
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inv(); }

FieldElement FieldElement::pow(int e) const {
  if (e < 0) return inv().pow(-e);
  FieldElement result = tower_->one();
  FieldElement base = *this;
  unsigned exp = static_cast<unsigned>(e);
  while (exp) {
    if (exp & 1u) result = result * base;
    base = base * base;
    exp >>= 1;
  }
  return result;
}

FieldElement FieldElement::scaled(const BigRat& c) const {
  std::vector<RatFunc> coords;
  coords.reserve(coords_.size());
  RatFunc f = RatFunc::constant(tower_->k(), c);
  for (const auto& x : coords_) coords.push_back(x * f);
  return FieldElement(tower_, std::move(coords));
}

bool FieldElement::operator==(const FieldElement& o) const {
  check_same_tower(o);
  return coords_ == o.coords_;
}

FieldElement FieldElement::partial(int j) const {
  if (j < 0 || j >= tower_->k()) throw FuneqError("derivation index out of range");
  const int m = static_cast<int>(coords_.size());
  std::vector<RatFunc> base(m, RatFunc(tower_->k()));
  for (int l = 0; l < m; ++l) base[l] = coords_[l].partial(j);
  FieldElement result(tower_, std::move(base));
  if (m == 1) return result;

  // chain-rule part: (sum_l l x_l u^{l-1}) * du_j
  std::vector<RatFunc> mult(m, RatFunc(tower_->k()));
  bool needs_du = false;
  for (int l = 1; l < m; ++l) {
    if (coords_[l].is_zero()) continue;
    mult[l - 1] = coords_[l] * RatFunc::constant(tower_->k(), BigRat(l));
    needs_du = true;
  }
  if (!needs_du) return result;
  const auto& du = tower_->du_coords(j);
  if (!du) throw InseparableExtension(tower_->du_error());
  return result + FieldElement(tower_, std::move(mult)) * FieldElement(tower_, *du);
}

FieldElement FieldElement::iterated_partial(const std::vector<int>& m) const {
  if (static_cast<int>(m.size()) != tower_->k())
    throw FuneqError("multi-index length does not match the tower");
  FieldElement x = *this;
  for (int j = 0; j < tower_->k(); ++j)
    for (int i = 0; i < m[j]; ++i) x = x.partial(j);
  return x;
}

FieldElement eval_poly(const MultiPoly& p, const std::vector<FieldElement>& images) {
  assert(!images.empty());
  const TowerPtr& target = images[0].tower();
  FieldElement acc = target->zero();
  for (const auto& [e, c] : p.terms()) {
    FieldElement term = target->from_rational(c);
    for (size_t j = 0; j < e.size(); ++j)
      if (e[j] != 0) term = term * images[j].pow(e[j]);
    acc = acc + term;
  }
  return acc;
}

FieldElement FieldElement::substitute(const SubstImages& images) const {
  const int kk = tower_->k();
  if (static_cast<int>(images.t_images.size()) != kk)
    throw FuneqError("substitution images do not cover all generators");
  const TowerPtr& target = images.t_images[0].tower();
  for (const auto& img : images.t_images)
    if (!Tower::same(img.tower(), target)) throw TowerMismatch();
  if (images.u_image && !Tower::same(images.u_image->tower(), target)) throw TowerMismatch();

  FieldElement acc = target->zero();
  for (size_t l = 0; l < coords_.size(); ++l) {
    const RatFunc& c = coords_[l];
    if (c.is_zero()) continue;
    if (l >= 1 && !images.u_image)
      throw FuneqError("substitution requires an image for " + tower_->u_name());
    FieldElement num = eval_poly(c.num(), images.t_images);
    FieldElement den = eval_poly(c.den(), images.t_images);
    if (den.is_zero())
      throw SingularSubstitution("denominator vanishes identically under the substitution");
    FieldElement val = num / den;
    if (l >= 1) val = val * images.u_image->pow(static_cast<int>(l));
    acc = acc + val;
  }
  return acc;
}

std::optional<std::pair<BigRat, std::vector<int>>> as_monomial(const FieldElement& x) {
  if (!x.in_base_field() || x.is_zero()) return std::nullopt;
  const RatFunc& r = x.coord(0);
  if (r.num().terms().size() != 1 || r.den().terms().size() != 1) return std::nullopt;
  const auto& [ne, nc] = *r.num().terms().begin();
  const auto& [de, dc] = *r.den().terms().begin();
  std::vector<int> e(ne.size());
  for (size_t i = 0; i < ne.size(); ++i) e[i] = ne[i] - de[i];
  return std::make_pair(nc / dc, std::move(e));
}

}  // namespace funeq
