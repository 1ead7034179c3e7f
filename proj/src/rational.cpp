#include "funeq/rational.hpp"

#include "funeq/error.hpp"

namespace funeq {

BigRat::BigRat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void BigRat::normalize() {
  if (den_.is_zero()) throw DivisionByZero("rational with zero denominator");
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = BigInt::gcd(num_, den_);
  if (g != BigInt(1)) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

BigRat BigRat::operator-() const {
  BigRat r = *this;
  r.num_ = -r.num_;
  return r;
}

BigRat BigRat::operator+(const BigRat& o) const {
  return BigRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

BigRat BigRat::operator-(const BigRat& o) const {
  return BigRat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

BigRat BigRat::operator*(const BigRat& o) const {
  return BigRat(num_ * o.num_, den_ * o.den_);
}

BigRat BigRat::operator/(const BigRat& o) const {
  if (o.is_zero()) throw DivisionByZero("rational division by zero");
  return BigRat(num_ * o.den_, den_ * o.num_);
}

BigRat BigRat::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  return BigRat(den_, num_);
}

BigRat BigRat::abs() const {
  BigRat r = *this;
  r.num_ = r.num_.abs();
  return r;
}

BigRat BigRat::pow(int e) const {
  if (e == 0) return BigRat(1);
  if (e < 0) return inv().pow(-e);
  BigRat r(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
  return r;
}

bool BigRat::operator<(const BigRat& o) const {
  return num_ * o.den_ < o.num_ * den_;
}

std::string BigRat::to_string() const {
  if (is_integer()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

}  // namespace funeq
