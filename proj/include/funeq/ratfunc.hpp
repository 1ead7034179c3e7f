#pragma once

#include <string>
#include <vector>

#include "funeq/multipoly.hpp"

namespace funeq {

// Rational function num/den over Q(t_1..t_k) in canonical form: coprime
// primitive parts, lex-leading coefficient of the denominator equal to 1.
class RatFunc {
 public:
  explicit RatFunc(int nvars = 0);
  RatFunc(MultiPoly num, MultiPoly den);
  static RatFunc from_poly(MultiPoly p);
  static RatFunc constant(int nvars, BigRat c);
  static RatFunc variable(int nvars, int j);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  int nvars() const { return num_.nvars(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_polynomial() const;
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  BigRat constant_value() const;

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc inv() const;
  RatFunc pow(int e) const;

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc partial(int j) const;  // quotient rule

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  MultiPoly num_, den_;
  void normalize();
};

}  // namespace funeq
