#include "funeq/expr.hpp"

#include <cctype>

#include "funeq/error.hpp"

namespace funeq {

namespace {

struct Parser {
  std::string_view src;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }

  bool eof() {
    skip_ws();
    return pos >= src.size();
  }

  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }

  bool accept(char c) {
    skip_ws();
    if (pos < src.size() && src[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

  ExprAst::Ptr make(ExprAst::Kind kind) {
    auto n = std::make_unique<ExprAst>();
    n->kind = kind;
    n->pos = pos;
    return n;
  }

  ExprAst::Ptr parse_expr() {
    auto lhs = parse_term();
    for (;;) {
      if (accept('+')) {
        auto n = make(ExprAst::Kind::add);
        n->lhs = std::move(lhs);
        n->rhs = parse_term();
        lhs = std::move(n);
      } else if (accept('-')) {
        auto n = make(ExprAst::Kind::sub);
        n->lhs = std::move(lhs);
        n->rhs = parse_term();
        lhs = std::move(n);
      } else {
        return lhs;
      }
    }
  }

  ExprAst::Ptr parse_term() {
    auto lhs = parse_unary();
    for (;;) {
      if (accept('*')) {
        auto n = make(ExprAst::Kind::mul);
        n->lhs = std::move(lhs);
        n->rhs = parse_unary();
        lhs = std::move(n);
      } else if (accept('/')) {
        auto n = make(ExprAst::Kind::div);
        n->lhs = std::move(lhs);
        n->rhs = parse_unary();
        lhs = std::move(n);
      } else {
        return lhs;
      }
    }
  }

  ExprAst::Ptr parse_unary() {
    if (accept('-')) {
      auto n = make(ExprAst::Kind::neg);
      n->lhs = parse_unary();
      return n;
    }
    if (accept('+')) return parse_unary();
    return parse_power();
  }

  ExprAst::Ptr parse_power() {
    auto base = parse_atom();
    if (accept('^')) {
      skip_ws();
      if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
        fail("expected a nonnegative integer exponent after '^'");
      long long e = 0;
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
        e = e * 10 + (src[pos] - '0');
        if (e > 1000000) fail("exponent too large");
        ++pos;
      }
      auto n = make(ExprAst::Kind::pow);
      n->exponent = static_cast<int>(e);
      n->lhs = std::move(base);
      return n;
    }
    return base;
  }

  ExprAst::Ptr parse_atom() {
    skip_ws();
    if (pos >= src.size()) fail("unexpected end of expression");
    char c = src[pos];
    if (c == '(') {
      ++pos;
      auto inner = parse_expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
      auto n = make(ExprAst::Kind::rational);
      n->value = BigRat::from_int(BigInt::from_string(src.substr(start, pos - start)));
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
        ++pos;
      auto n = make(ExprAst::Kind::variable);
      n->name = std::string(src.substr(start, pos - start));
      return n;
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

// fold literal-only subtrees; flags syntactic division by a zero literal
bool fold_constants(ExprAst& node) {
  switch (node.kind) {
    case ExprAst::Kind::rational:
      return true;
    case ExprAst::Kind::variable:
      return false;
    case ExprAst::Kind::neg: {
      if (fold_constants(*node.lhs)) {
        node.value = -node.lhs->value;
        node.kind = ExprAst::Kind::rational;
        node.lhs.reset();
        return true;
      }
      return false;
    }
    case ExprAst::Kind::pow: {
      if (fold_constants(*node.lhs)) {
        node.value = node.lhs->value.pow(node.exponent);
        node.kind = ExprAst::Kind::rational;
        node.lhs.reset();
        return true;
      }
      return false;
    }
    default: {
      bool l = fold_constants(*node.lhs);
      bool r = fold_constants(*node.rhs);
      if (node.kind == ExprAst::Kind::div && r && node.rhs->value.is_zero())
        throw ParseError("division by zero", node.pos);
      if (!l || !r) return false;
      switch (node.kind) {
        case ExprAst::Kind::add: node.value = node.lhs->value + node.rhs->value; break;
        case ExprAst::Kind::sub: node.value = node.lhs->value - node.rhs->value; break;
        case ExprAst::Kind::mul: node.value = node.lhs->value * node.rhs->value; break;
        case ExprAst::Kind::div: node.value = node.lhs->value / node.rhs->value; break;
        default: break;
      }
      node.kind = ExprAst::Kind::rational;
      node.lhs.reset();
      node.rhs.reset();
      return true;
    }
  }
}

FieldElement eval_ast(const ExprAst& node, const TowerPtr& tower) {
  switch (node.kind) {
    case ExprAst::Kind::rational:
      return tower->from_rational(node.value);
    case ExprAst::Kind::variable: {
      for (int j = 0; j < tower->k(); ++j)
        if (tower->var_names()[j] == node.name) return tower->gen(j);
      if (tower->has_extension() && tower->u_name() == node.name) return tower->u();
      throw ParseError("unknown symbol '" + node.name + "'", node.pos);
    }
    case ExprAst::Kind::neg:
      return -eval_ast(*node.lhs, tower);
    case ExprAst::Kind::pow:
      return eval_ast(*node.lhs, tower).pow(node.exponent);
    case ExprAst::Kind::add:
      return eval_ast(*node.lhs, tower) + eval_ast(*node.rhs, tower);
    case ExprAst::Kind::sub:
      return eval_ast(*node.lhs, tower) - eval_ast(*node.rhs, tower);
    case ExprAst::Kind::mul:
      return eval_ast(*node.lhs, tower) * eval_ast(*node.rhs, tower);
    case ExprAst::Kind::div: {
      FieldElement den = eval_ast(*node.rhs, tower);
      if (den.is_zero()) throw ParseError("division by zero", node.pos);
      return eval_ast(*node.lhs, tower) / den;
    }
  }
  throw FuneqError("unreachable");
}

}  // namespace

ExprAst::Ptr parse_expression_ast(std::string_view source) {
  Parser p{source};
  auto ast = p.parse_expr();
  if (!p.eof()) p.fail("trailing input after expression");
  fold_constants(*ast);
  return ast;
}

FieldElement parse_element(std::string_view source, const TowerPtr& tower) {
  auto ast = parse_expression_ast(source);
  return eval_ast(*ast, tower);
}

std::string print_ratfunc(const RatFunc& r, const std::vector<std::string>& names) {
  return r.to_string(names);
}

std::string print_element(const FieldElement& x) {
  const Tower& tw = *x.tower();
  if (x.in_base_field()) return x.coord(0).to_string(tw.var_names());
  std::string out;
  for (int l = 0; l < tw.ext_degree(); ++l) {
    const RatFunc& c = x.coord(l);
    if (c.is_zero()) continue;
    std::string part;
    if (l == 0) {
      part = "(" + c.to_string(tw.var_names()) + ")";
    } else {
      part = "(" + c.to_string(tw.var_names()) + ")*" + tw.u_name();
      if (l > 1) part += "^" + std::to_string(l);
    }
    if (!out.empty()) out += " + ";
    out += part;
  }
  if (out.empty()) out = "0";
  return out;
}

}  // namespace funeq
