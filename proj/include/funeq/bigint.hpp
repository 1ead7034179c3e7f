#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace funeq {

// Signed arbitrary-precision integer, base 2^32 little-endian magnitude.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);

  static BigInt from_string(std::string_view s);

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }
  bool is_odd() const { return sign_ != 0 && (limbs_[0] & 1u); }

  BigInt operator-() const;
  BigInt abs() const;

  BigInt operator+(const BigInt& o) const;
  BigInt operator-(const BigInt& o) const;
  BigInt operator*(const BigInt& o) const;
  BigInt operator/(const BigInt& o) const;  // truncated toward zero
  BigInt operator%(const BigInt& o) const;  // sign follows dividend

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  // quotient truncated toward zero, remainder with dividend's sign
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

  static BigInt gcd(const BigInt& a, const BigInt& b);  // nonnegative
  BigInt pow(unsigned e) const;

  static int compare(const BigInt& a, const BigInt& b);
  bool operator==(const BigInt& o) const { return compare(*this, o) == 0; }
  bool operator!=(const BigInt& o) const { return compare(*this, o) != 0; }
  bool operator<(const BigInt& o) const { return compare(*this, o) < 0; }
  bool operator<=(const BigInt& o) const { return compare(*this, o) <= 0; }
  bool operator>(const BigInt& o) const { return compare(*this, o) > 0; }
  bool operator>=(const BigInt& o) const { return compare(*this, o) >= 0; }

  std::string to_string() const;

  // fits in long long? (for small-number fast paths)
  bool fits_int64() const;
  long long to_int64() const;

 private:
  int sign_ = 0;                 // -1, 0, +1
  std::vector<uint32_t> limbs_;  // empty iff sign_ == 0, no leading zero limb

  void trim();
  static int compare_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  // requires |a| >= |b|
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                         std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

BigInt factorial(unsigned n);
BigInt falling_factorial(long long e, unsigned m);  // e(e-1)...(e-m+1)
BigInt binomial(unsigned n, unsigned k);

}  // namespace funeq
