#pragma once

#include <map>
#include <string>
#include <vector>

#include "funeq/rational.hpp"

namespace funeq {

// Sparse multivariate polynomial over the rationals. Terms are keyed by
// exponent tuples and iterate in lexicographic order; zero coefficients are
// never stored.
class MultiPoly {
 public:
  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(int nvars, BigRat c);
  static MultiPoly variable(int nvars, int j);  // t_j, 0-based
  static MultiPoly monomial(int nvars, std::vector<int> expo, BigRat c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  BigRat constant_value() const;  // requires is_constant()

  const std::map<std::vector<int>, BigRat>& terms() const { return terms_; }
  BigRat coeff(const std::vector<int>& expo) const;
  void set_coeff(std::vector<int> expo, BigRat c);  // removes term when c == 0
  void add_term(const std::vector<int>& expo, const BigRat& c);

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scaled(const BigRat& c) const;
  MultiPoly pow(unsigned e) const;

  bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly partial(int j) const;

  int degree_in(int j) const;  // -1 for the zero polynomial
  int total_degree() const;    // -1 for the zero polynomial

  // lex-maximal term
  const std::vector<int>& lex_leading_expo() const;
  const BigRat& lex_leading_coeff() const;

  // positive rational c with (*this)/c integer-primitive; sign carried by pp
  BigRat rational_content() const;
  // integer-primitive associate with positive lex-leading coefficient
  MultiPoly normalized_primitive() const;

  // exact quotient; throws FuneqError when the division is not exact
  static MultiPoly divide_exact(const MultiPoly& f, const MultiPoly& g);
  // gcd, normalized integer-primitive with positive lex-leading coefficient
  static MultiPoly gcd(const MultiPoly& f, const MultiPoly& g);

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  int nvars_;
  std::map<std::vector<int>, BigRat> terms_;
};

}  // namespace funeq
