#include "funeq/multipoly.hpp"

#include <algorithm>
#include <cassert>

#include "funeq/error.hpp"

namespace funeq {

MultiPoly MultiPoly::constant(int nvars, BigRat c) {
  MultiPoly p(nvars);
  if (!c.is_zero()) p.terms_.emplace(std::vector<int>(nvars, 0), std::move(c));
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int j) {
  assert(j >= 0 && j < nvars);
  std::vector<int> e(nvars, 0);
  e[j] = 1;
  return monomial(nvars, std::move(e), BigRat(1));
}

MultiPoly MultiPoly::monomial(int nvars, std::vector<int> expo, BigRat c) {
  MultiPoly p(nvars);
  assert(static_cast<int>(expo.size()) == nvars);
  if (!c.is_zero()) p.terms_.emplace(std::move(expo), std::move(c));
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

BigRat MultiPoly::constant_value() const {
  if (terms_.empty()) return BigRat(0);
  assert(is_constant());
  return terms_.begin()->second;
}

BigRat MultiPoly::coeff(const std::vector<int>& expo) const {
  auto it = terms_.find(expo);
  return it == terms_.end() ? BigRat(0) : it->second;
}

void MultiPoly::set_coeff(std::vector<int> expo, BigRat c) {
  assert(static_cast<int>(expo.size()) == nvars_);
  if (c.is_zero())
    terms_.erase(expo);
  else
    terms_[std::move(expo)] = std::move(c);
}

void MultiPoly::add_term(const std::vector<int>& expo, const BigRat& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(expo);
  if (it == terms_.end()) {
    terms_.emplace(expo, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  assert(nvars_ == o.nvars_);
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  assert(nvars_ == o.nvars_);
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  assert(nvars_ == o.nvars_);
  MultiPoly r(nvars_);
  std::vector<int> e(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly MultiPoly::scaled(const BigRat& c) const {
  MultiPoly r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(nvars_, BigRat(1));
  MultiPoly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

MultiPoly MultiPoly::partial(int j) const {
  assert(j >= 0 && j < nvars_);
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[j] == 0) continue;
    std::vector<int> e2 = e;
    e2[j] -= 1;
    r.add_term(e2, c * BigRat(e[j]));
  }
  return r;
}

int MultiPoly::degree_in(int j) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[j]);
  return d;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

const std::vector<int>& MultiPoly::lex_leading_expo() const {
  assert(!terms_.empty());
  return terms_.rbegin()->first;
}

const BigRat& MultiPoly::lex_leading_coeff() const {
  assert(!terms_.empty());
  return terms_.rbegin()->second;
}

BigRat MultiPoly::rational_content() const {
  if (terms_.empty()) return BigRat(0);
  BigInt num_gcd(0), den_lcm(1);
  for (const auto& [e, c] : terms_) {
    num_gcd = BigInt::gcd(num_gcd, c.num());
    den_lcm = den_lcm / BigInt::gcd(den_lcm, c.den()) * c.den();
  }
  return BigRat(num_gcd, den_lcm);
}

MultiPoly MultiPoly::normalized_primitive() const {
  if (terms_.empty()) return *this;
  BigRat c = rational_content();
  if (lex_leading_coeff().sign() < 0) c = -c;
  MultiPoly r(nvars_);
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v / c);
  return r;
}

namespace {

bool expo_divides(const std::vector<int>& a, const std::vector<int>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

MultiPoly MultiPoly::divide_exact(const MultiPoly& f, const MultiPoly& g) {
  assert(f.nvars() == g.nvars());
  if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
  MultiPoly rem = f, quot(f.nvars());
  const auto& glead_e = g.lex_leading_expo();
  const auto& glead_c = g.lex_leading_coeff();
  while (!rem.is_zero()) {
    const auto& rlead_e = rem.lex_leading_expo();
    if (!expo_divides(glead_e, rlead_e))
      throw FuneqError("polynomial division is not exact");
    std::vector<int> qe(rlead_e.size());
    for (size_t i = 0; i < qe.size(); ++i) qe[i] = rlead_e[i] - glead_e[i];
    BigRat qc = rem.lex_leading_coeff() / glead_c;
    MultiPoly t = monomial(f.nvars(), qe, qc);
    quot = quot + t;
    rem = rem - t * g;
  }
  return quot;
}

namespace {

// polynomial viewed univariately in variable x: degree -> coefficient with
// the x-exponent stripped
std::map<int, MultiPoly> univariate_view(const MultiPoly& f, int x) {
  std::map<int, MultiPoly> view;
  for (const auto& [e, c] : f.terms()) {
    int d = e[x];
    std::vector<int> e2 = e;
    e2[x] = 0;
    auto it = view.find(d);
    if (it == view.end()) it = view.emplace(d, MultiPoly(f.nvars())).first;
    it->second.add_term(e2, c);
  }
  return view;
}

int lowest_var_present(const MultiPoly& f, const MultiPoly& g) {
  int nv = f.nvars();
  for (int j = 0; j < nv; ++j)
    if (f.degree_in(j) > 0 || g.degree_in(j) > 0) return j;
  return -1;
}

MultiPoly content_wrt(const MultiPoly& f, int x) {
  MultiPoly c(f.nvars());
  for (const auto& [d, coef] : univariate_view(f, x)) c = MultiPoly::gcd(c, coef);
  return c;
}

// pseudo-remainder of f by g in the main variable x (associate is all we need)
MultiPoly pseudo_rem(MultiPoly f, const MultiPoly& g, int x) {
  int dg = g.degree_in(x);
  auto gview = univariate_view(g, x);
  MultiPoly glead = gview.rbegin()->second;
  while (!f.is_zero() && f.degree_in(x) >= dg) {
    auto fview = univariate_view(f, x);
    int df = fview.rbegin()->first;
    MultiPoly flead = fview.rbegin()->second;
    std::vector<int> shift(f.nvars(), 0);
    shift[x] = df - dg;
    MultiPoly xpow = MultiPoly::monomial(f.nvars(), shift, BigRat(1));
    f = f * glead - g * flead * xpow;
  }
  return f;
}

}  // namespace

MultiPoly MultiPoly::gcd(const MultiPoly& f, const MultiPoly& g) {
  if (f.is_zero()) return g.normalized_primitive();
  if (g.is_zero()) return f.normalized_primitive();
  int x = lowest_var_present(f, g);
  if (x < 0) return constant(f.nvars(), BigRat(1));  // both constants
  if (f.degree_in(x) <= 0) return gcd(f, content_wrt(g, x));
  if (g.degree_in(x) <= 0) return gcd(content_wrt(f, x), g);

  MultiPoly cf = content_wrt(f, x), cg = content_wrt(g, x);
  MultiPoly cont = gcd(cf, cg);
  MultiPoly a = divide_exact(f, cf), b = divide_exact(g, cg);
  // primitive Euclidean loop
  while (!b.is_zero()) {
    MultiPoly r = pseudo_rem(a, b, x);
    a = std::move(b);
    if (r.is_zero()) {
      b = MultiPoly(f.nvars());
    } else {
      b = divide_exact(r, content_wrt(r, x)).normalized_primitive();
    }
  }
  MultiPoly pp = divide_exact(a, content_wrt(a, x));
  return (cont * pp).normalized_primitive();
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // leading term first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigRat ac = c.abs();
    if (first) {
      if (c.sign() < 0) out += "-";
      first = false;
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    std::string mono;
    for (size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[j];
      if (e[j] > 1) mono += "^" + std::to_string(e[j]);
    }
    if (mono.empty()) {
      out += ac.to_string();
    } else if (ac.is_one()) {
      out += mono;
    } else {
      out += ac.to_string() + "*" + mono;
    }
  }
  return out;
}

}  // namespace funeq
