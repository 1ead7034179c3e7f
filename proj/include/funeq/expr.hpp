#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "funeq/tower.hpp"

namespace funeq {

// AST for the element grammar. Precedence: power > unary minus > mul/div >
// add/sub, all left associative; exponents are nonnegative integers.
struct ExprAst {
  enum class Kind { rational, variable, neg, add, sub, mul, div, pow };
  using Ptr = std::unique_ptr<ExprAst>;

  Kind kind;
  std::size_t pos = 0;
  BigRat value;          // rational
  std::string name;      // variable
  int exponent = 0;      // pow
  Ptr lhs, rhs;          // binary / unary (lhs only for neg, pow)
};

ExprAst::Ptr parse_expression_ast(std::string_view source);

// parse + evaluate over a tower; recognizes the t-generators and u
FieldElement parse_element(std::string_view source, const TowerPtr& tower);

// canonical, re-parseable printing
std::string print_ratfunc(const RatFunc& r, const std::vector<std::string>& names);
std::string print_element(const FieldElement& x);

}  // namespace funeq
