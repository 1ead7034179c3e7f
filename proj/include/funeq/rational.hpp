#pragma once

#include <string>

#include "funeq/bigint.hpp"

namespace funeq {

// Exact rational, always reduced, denominator > 0, canonical zero is 0/1.
class BigRat {
 public:
  BigRat() : num_(0), den_(1) {}
  BigRat(long long v) : num_(v), den_(1) {}
  BigRat(BigInt num, BigInt den);
  static BigRat from_int(BigInt v) { return BigRat(std::move(v), BigInt(1)); }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_ == BigInt(1) && num_ == BigInt(1); }
  bool is_integer() const { return den_ == BigInt(1); }
  int sign() const { return num_.sign(); }

  BigRat operator-() const;
  BigRat operator+(const BigRat& o) const;
  BigRat operator-(const BigRat& o) const;
  BigRat operator*(const BigRat& o) const;
  BigRat operator/(const BigRat& o) const;
  BigRat& operator+=(const BigRat& o) { return *this = *this + o; }
  BigRat& operator-=(const BigRat& o) { return *this = *this - o; }
  BigRat& operator*=(const BigRat& o) { return *this = *this * o; }
  BigRat& operator/=(const BigRat& o) { return *this = *this / o; }

  BigRat inv() const;
  BigRat abs() const;
  BigRat pow(int e) const;

  bool operator==(const BigRat& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const BigRat& o) const { return !(*this == o); }
  bool operator<(const BigRat& o) const;

  std::string to_string() const;  // "p" or "p/q"

 private:
  BigInt num_, den_;
  void normalize();
};

}  // namespace funeq
