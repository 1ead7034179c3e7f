#include "funeq/ratfunc.hpp"

#include <cassert>

#include "funeq/error.hpp"

namespace funeq {

RatFunc::RatFunc(int nvars)
    : num_(MultiPoly(nvars)), den_(MultiPoly::constant(nvars, BigRat(1))) {}

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

RatFunc RatFunc::from_poly(MultiPoly p) {
  RatFunc r(p.nvars());
  r.num_ = std::move(p);
  return r;
}

RatFunc RatFunc::constant(int nvars, BigRat c) {
  return from_poly(MultiPoly::constant(nvars, std::move(c)));
}

RatFunc RatFunc::variable(int nvars, int j) {
  return from_poly(MultiPoly::variable(nvars, j));
}

void RatFunc::normalize() {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(num_.nvars(), BigRat(1));
    return;
  }
  MultiPoly g = MultiPoly::gcd(num_, den_);
  if (!(g.is_constant() && g.constant_value().is_one())) {
    num_ = MultiPoly::divide_exact(num_, g);
    den_ = MultiPoly::divide_exact(den_, g);
  }
  BigRat lead = den_.lex_leading_coeff();
  if (!lead.is_one()) {
    BigRat inv_lead = lead.inv();
    num_ = num_.scaled(inv_lead);
    den_ = den_.scaled(inv_lead);
  }
}

bool RatFunc::is_one() const {
  return den_.is_constant() && den_.constant_value().is_one() && num_.is_constant() &&
         num_.constant_value().is_one();
}

bool RatFunc::is_polynomial() const {
  return den_.is_constant() && den_.constant_value().is_one();
}

BigRat RatFunc::constant_value() const {
  assert(is_constant());
  if (num_.is_zero()) return BigRat(0);
  return num_.constant_value() / den_.constant_value();
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw DivisionByZero("rational function division by zero");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inv().pow(-e);
  return RatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

RatFunc RatFunc::partial(int j) const {
  // (n'd - nd') / d^2
  MultiPoly n = num_.partial(j) * den_ - num_ * den_.partial(j);
  return RatFunc(std::move(n), den_ * den_);
}

std::string RatFunc::to_string(const std::vector<std::string>& names) const {
  if (is_polynomial()) return num_.to_string(names);
  // display with integer coefficients: scale both parts by the common
  // denominator, then strip the common integer content
  BigInt lcm(1);
  for (const MultiPoly* p : {&num_, &den_})
    for (const auto& [e, c] : p->terms()) lcm = lcm / BigInt::gcd(lcm, c.den()) * c.den();
  BigInt g(0);
  for (const MultiPoly* p : {&num_, &den_})
    for (const auto& [e, c] : p->terms())
      g = BigInt::gcd(g, c.num() * (lcm / c.den()));
  BigRat scale(lcm, g);
  MultiPoly dn = num_.scaled(scale), dd = den_.scaled(scale);
  std::string n = dn.to_string(names);
  if (dn.terms().size() > 1) n = "(" + n + ")";
  return n + "/(" + dd.to_string(names) + ")";
}

}  // namespace funeq
