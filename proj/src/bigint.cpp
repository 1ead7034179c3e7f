#include "funeq/bigint.hpp"

#include <algorithm>
#include <cassert>

#include "funeq/error.hpp"

namespace funeq {

namespace {
constexpr uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v > 0 ? 1 : -1;
  // avoid overflow on LLONG_MIN
  unsigned long long mag = v > 0 ? static_cast<unsigned long long>(v)
                                 : ~static_cast<unsigned long long>(v) + 1ull;
  while (mag) {
    limbs_.push_back(static_cast<uint32_t>(mag & 0xffffffffu));
    mag >>= 32;
  }
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) sign_ = 0;
}

int BigInt::compare_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  std::vector<uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < r.size(); ++i) {
    uint64_t s = carry;
    if (i < a.size()) s += a[i];
    if (i < b.size()) s += b[i];
    r[i] = static_cast<uint32_t>(s & 0xffffffffu);
    carry = s >> 32;
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  std::vector<uint32_t> r(a.size(), 0);
  int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t s = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
    if (s < 0) {
      s += static_cast<int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    r[i] = static_cast<uint32_t>(s);
  }
  assert(borrow == 0);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint32_t> r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < b.size(); ++j) {
      uint64_t cur = static_cast<uint64_t>(a[i]) * b[j] + r[i + j] + carry;
      r[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    size_t idx = i + b.size();
    while (carry) {
      uint64_t cur = r[idx] + carry;
      r[idx] = static_cast<uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++idx;
    }
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// Knuth algorithm D
void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
  assert(!b.empty());
  q.clear();
  r.clear();
  if (compare_mag(a, b) < 0) {
    r = a;
    return;
  }
  if (b.size() == 1) {
    uint64_t d = b[0];
    q.assign(a.size(), 0);
    uint64_t rem = 0;
    for (size_t i = a.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | a[i];
      q[i] = static_cast<uint32_t>(cur / d);
      rem = cur % d;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    if (rem) r.push_back(static_cast<uint32_t>(rem));
    return;
  }

  // normalize so the divisor's top bit is set
  int shift = 0;
  for (uint32_t top = b.back(); !(top & 0x80000000u); top <<= 1) ++shift;
  const size_t n = b.size();
  const size_t m = a.size() - n;
  std::vector<uint32_t> u(a.size() + 1, 0), v(n, 0);
  for (size_t i = a.size(); i-- > 0;) {
    u[i] = a[i] << shift;
    if (shift && i > 0) u[i] |= static_cast<uint32_t>(static_cast<uint64_t>(a[i - 1]) >> (32 - shift));
  }
  if (shift) u[a.size()] = static_cast<uint32_t>(static_cast<uint64_t>(a.back()) >> (32 - shift));
  for (size_t i = n; i-- > 0;) {
    v[i] = b[i] << shift;
    if (shift && i > 0) v[i] |= static_cast<uint32_t>(static_cast<uint64_t>(b[i - 1]) >> (32 - shift));
  }

  q.assign(m + 1, 0);
  for (size_t j = m + 1; j-- > 0;) {
    uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
    uint64_t qhat = num / v[n - 1];
    uint64_t rhat = num % v[n - 1];
    while (qhat >= kBase ||
           qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
      --qhat;
      rhat += v[n - 1];
      if (rhat >= kBase) break;
    }
    // multiply-subtract
    int64_t borrow = 0;
    uint64_t carry = 0;
    for (size_t i = 0; i < n; ++i) {
      uint64_t p = qhat * v[i] + carry;
      carry = p >> 32;
      int64_t t = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(p & 0xffffffffu) - borrow;
      if (t < 0) {
        t += static_cast<int64_t>(kBase);
        borrow = 1;
      } else {
        borrow = 0;
      }
      u[i + j] = static_cast<uint32_t>(t);
    }
    int64_t t = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
    if (t < 0) {
      // qhat was one too large: add back
      t += static_cast<int64_t>(kBase);
      --qhat;
      uint64_t c2 = 0;
      for (size_t i = 0; i < n; ++i) {
        uint64_t s = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
        u[i + j] = static_cast<uint32_t>(s & 0xffffffffu);
        c2 = s >> 32;
      }
      t += static_cast<int64_t>(c2);
      t &= 0xffffffffll;
    }
    u[j + n] = static_cast<uint32_t>(t);
    q[j] = static_cast<uint32_t>(qhat);
  }
  while (!q.empty() && q.back() == 0) q.pop_back();
  // denormalize remainder
  r.assign(n, 0);
  for (size_t i = 0; i < n; ++i) {
    r[i] = u[i] >> shift;
    if (shift && i + 1 < u.size()) r[i] |= static_cast<uint32_t>(static_cast<uint64_t>(u[i + 1]) << (32 - shift));
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
}

int BigInt::compare(const BigInt& a, const BigInt& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
  int c = compare_mag(a.limbs_, b.limbs_);
  return a.sign_ >= 0 ? c : -c;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  if (r.sign_ < 0) r.sign_ = 1;
  return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
  if (sign_ == 0) return o;
  if (o.sign_ == 0) return *this;
  BigInt r;
  if (sign_ == o.sign_) {
    r.limbs_ = add_mag(limbs_, o.limbs_);
    r.sign_ = sign_;
  } else {
    int c = compare_mag(limbs_, o.limbs_);
    if (c == 0) return BigInt();
    if (c > 0) {
      r.limbs_ = sub_mag(limbs_, o.limbs_);
      r.sign_ = sign_;
    } else {
      r.limbs_ = sub_mag(o.limbs_, limbs_);
      r.sign_ = o.sign_;
    }
  }
  return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
  if (sign_ == 0 || o.sign_ == 0) return BigInt();
  BigInt r;
  r.limbs_ = mul_mag(limbs_, o.limbs_);
  r.sign_ = sign_ * o.sign_;
  return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (b.sign_ == 0) throw DivisionByZero("integer division by zero");
  if (a.sign_ == 0) {
    q = BigInt();
    r = BigInt();
    return;
  }
  BigInt qq, rr;
  divmod_mag(a.limbs_, b.limbs_, qq.limbs_, rr.limbs_);
  qq.sign_ = qq.limbs_.empty() ? 0 : a.sign_ * b.sign_;
  rr.sign_ = rr.limbs_.empty() ? 0 : a.sign_;
  q = std::move(qq);
  r = std::move(rr);
}

BigInt BigInt::operator/(const BigInt& o) const {
  BigInt q, r;
  divmod(*this, o, q, r);
  return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
  BigInt q, r;
  divmod(*this, o, q, r);
  return r;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
  BigInt x = a.abs(), y = b.abs();
  while (!y.is_zero()) {
    BigInt q, r;
    divmod(x, y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

BigInt BigInt::pow(unsigned e) const {
  BigInt base = *this, result(1);
  while (e) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

BigInt BigInt::from_string(std::string_view s) {
  size_t i = 0;
  int sign = 1;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    if (s[i] == '-') sign = -1;
    ++i;
  }
  if (i >= s.size()) throw FuneqError("empty integer literal");
  BigInt r;
  const BigInt chunk_base(1000000000ll);
  while (i < s.size()) {
    size_t take = std::min<size_t>(9, s.size() - i);
    long long part = 0;
    for (size_t j = 0; j < take; ++j, ++i) {
      if (s[i] < '0' || s[i] > '9') throw FuneqError("invalid digit in integer literal");
      part = part * 10 + (s[i] - '0');
    }
    BigInt scale(1);
    for (size_t j = 0; j < take; ++j) scale *= BigInt(10);
    r = r * scale + BigInt(part);
  }
  if (sign < 0) r = -r;
  return r;
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  BigInt x = abs();
  const BigInt ten9(1000000000ll);
  std::vector<uint32_t> chunks;
  while (!x.is_zero()) {
    BigInt q, r;
    divmod(x, ten9, q, r);
    chunks.push_back(r.is_zero() ? 0u : r.limbs_[0]);
    x = std::move(q);
  }
  out = std::to_string(chunks.back());
  for (size_t i = chunks.size() - 1; i-- > 0;) {
    std::string part = std::to_string(chunks[i]);
    out += std::string(9 - part.size(), '0') + part;
  }
  if (sign_ < 0) out.insert(out.begin(), '-');
  return out;
}

bool BigInt::fits_int64() const {
  if (limbs_.size() > 2) return false;
  if (limbs_.size() < 2) return true;
  uint64_t mag = (static_cast<uint64_t>(limbs_[1]) << 32) | limbs_[0];
  return mag <= 0x7fffffffffffffffull;
}

long long BigInt::to_int64() const {
  assert(fits_int64());
  uint64_t mag = 0;
  if (limbs_.size() > 1) mag = static_cast<uint64_t>(limbs_[1]) << 32;
  if (!limbs_.empty()) mag |= limbs_[0];
  return sign_ >= 0 ? static_cast<long long>(mag) : -static_cast<long long>(mag);
}

BigInt factorial(unsigned n) {
  BigInt r(1);
  for (unsigned i = 2; i <= n; ++i) r *= BigInt(static_cast<long long>(i));
  return r;
}

BigInt falling_factorial(long long e, unsigned m) {
  BigInt r(1);
  for (unsigned i = 0; i < m; ++i) r *= BigInt(e - static_cast<long long>(i));
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return BigInt();
  if (k > n - k) k = n - k;
  BigInt num(1), den(1);
  for (unsigned i = 0; i < k; ++i) {
    num *= BigInt(static_cast<long long>(n - i));
    den *= BigInt(static_cast<long long>(i + 1));
  }
  return num / den;
}

}  // namespace funeq
