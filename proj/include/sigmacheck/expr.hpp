// Copyright 2026 The sigmacheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SIGMACHECK_EXPR_HPP
#define SIGMACHECK_EXPR_HPP

#include <cctype>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sigmacheck/cyclotomic.hpp"
#include "sigmacheck/multipoly.hpp"

namespace sigmacheck {

// Parse failure with the 0-based offset into the input text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error("parse error at position " +
                           std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Expression tree over `+ - * / ^` with rational literals, zeta(N) atoms and
// named variables.  Trees remember explicit parenthesization so grammars that
// forbid reassociation can check it after parsing.
struct Expr {
  enum class Kind { number, zeta, variable, add, sub, neg, mul, div, pow };

  Kind kind = Kind::number;
  Rational number;                             // Kind::number
  unsigned zeta_order = 0;                     // Kind::zeta
  std::string name;                            // Kind::variable
  long exponent = 0;                           // Kind::pow
  std::vector<std::unique_ptr<Expr>> children;
  bool parenthesized = false;
  std::size_t position = 0;
};

using ExprPtr = std::unique_ptr<Expr>;

namespace detail {

struct Token {
  enum class Type { number, ident, op, end };
  Type type = Type::end;
  std::string text;
  std::size_t position = 0;
};

inline std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      tokens.push_back({Token::Type::number, text.substr(start, i - start),
                        start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) ||
              text[i] == '_'))
        ++i;
      tokens.push_back({Token::Type::ident, text.substr(start, i - start),
                        start});
      continue;
    }
    if (std::string("+-*/^(),").find(c) != std::string::npos) {
      tokens.push_back({Token::Type::op, std::string(1, c), i});
      ++i;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", i);
  }
  tokens.push_back({Token::Type::end, "", text.size()});
  return tokens;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : tokens_(tokenize(text)) {}

  ExprPtr parse() {
    ExprPtr e = parse_sum();
    expect_end();
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token take() { return tokens_[pos_++]; }
  bool at_op(const char* op) const {
    return peek().type == Token::Type::op && peek().text == op;
  }

  void expect_end() {
    if (peek().type != Token::Type::end)
      throw ParseError("unexpected trailing input '" + peek().text + "'",
                       peek().position);
  }

  ExprPtr make(Expr::Kind kind, std::size_t position) {
    auto e = std::make_unique<Expr>();
    e->kind = kind;
    e->position = position;
    return e;
  }

  ExprPtr parse_sum() {
    ExprPtr left = parse_product();
    while (at_op("+") || at_op("-")) {
      Token op = take();
      ExprPtr right = parse_product();
      ExprPtr node = make(op.text == "+" ? Expr::Kind::add : Expr::Kind::sub,
                          op.position);
      node->children.push_back(std::move(left));
      node->children.push_back(std::move(right));
      left = std::move(node);
    }
    return left;
  }

  ExprPtr parse_product() {
    ExprPtr left = parse_unary();
    while (at_op("*") || at_op("/")) {
      Token op = take();
      ExprPtr right = parse_unary();
      ExprPtr node = make(op.text == "*" ? Expr::Kind::mul : Expr::Kind::div,
                          op.position);
      node->children.push_back(std::move(left));
      node->children.push_back(std::move(right));
      left = std::move(node);
    }
    return left;
  }

  ExprPtr parse_unary() {
    if (at_op("-")) {
      Token op = take();
      ExprPtr node = make(Expr::Kind::neg, op.position);
      node->children.push_back(parse_unary());
      return node;
    }
    if (at_op("+")) {
      take();
      return parse_unary();
    }
    return parse_power();
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_atom();
    if (!at_op("^")) return base;
    Token op = take();
    bool negative = false;
    if (at_op("-")) {
      take();
      negative = true;
    }
    if (peek().type != Token::Type::number)
      throw ParseError("expected integer exponent after '^'",
                       peek().position);
    Token exp = take();
    ExprPtr node = make(Expr::Kind::pow, op.position);
    node->exponent = std::stol(exp.text) * (negative ? -1 : 1);
    node->children.push_back(std::move(base));
    return node;
  }

  ExprPtr parse_atom() {
    const Token& t = peek();
    if (t.type == Token::Type::number) {
      Token num = take();
      ExprPtr node = make(Expr::Kind::number, num.position);
      node->number = Rational(mpz_class(num.text));
      return node;
    }
    if (t.type == Token::Type::ident) {
      Token id = take();
      if (id.text == "zeta") {
        if (!at_op("("))
          throw ParseError("expected '(' after zeta", peek().position);
        take();
        if (peek().type != Token::Type::number)
          throw ParseError("expected root-of-unity order", peek().position);
        Token order = take();
        if (!at_op(")"))
          throw ParseError("expected ')' closing zeta", peek().position);
        take();
        ExprPtr node = make(Expr::Kind::zeta, id.position);
        node->zeta_order = static_cast<unsigned>(std::stoul(order.text));
        if (node->zeta_order == 0)
          throw ParseError("zeta order must be positive", order.position);
        return node;
      }
      ExprPtr node = make(Expr::Kind::variable, id.position);
      node->name = id.text;
      return node;
    }
    if (at_op("(")) {
      Token open = take();
      ExprPtr inner = parse_sum();
      if (!at_op(")"))
        throw ParseError("expected ')'", peek().position);
      take();
      inner->parenthesized = true;
      return inner;
    }
    throw ParseError("expected a value", t.position);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline ExprPtr parse_expr(const std::string& text) {
  return detail::Parser(text).parse();
}

// Evaluates an expression tree into any commutative-or-not algebra T.  The
// caller supplies the variable atoms, the action of scalars on T and the
// multiplicative unit (needed for x^0).  Products follow the tree shape, so
// non-associative targets are safe.
template <typename T>
T eval_expr(const Expr& e, const std::map<std::string, T>& atoms,
            const std::function<T(const CycloNum&)>& embed_scalar,
            const std::function<T(const T&, const T&)>& mul) {
  auto eval = [&](auto&& self, const Expr& node) -> T {
    switch (node.kind) {
      case Expr::Kind::number:
        return embed_scalar(CycloNum(node.number));
      case Expr::Kind::zeta:
        return embed_scalar(CycloNum::root_of_unity(node.zeta_order, 1));
      case Expr::Kind::variable: {
        auto it = atoms.find(node.name);
        if (it == atoms.end())
          throw ParseError("unknown variable '" + node.name + "'",
                           node.position);
        return it->second;
      }
      case Expr::Kind::add:
        return self(self, *node.children[0]) + self(self, *node.children[1]);
      case Expr::Kind::sub:
        return self(self, *node.children[0]) - self(self, *node.children[1]);
      case Expr::Kind::neg:
        return mul(embed_scalar(CycloNum(Rational(-1))),
                   self(self, *node.children[0]));
      case Expr::Kind::mul:
        return mul(self(self, *node.children[0]),
                   self(self, *node.children[1]));
      case Expr::Kind::div:
        throw ParseError("division is not allowed here", node.position);
      case Expr::Kind::pow: {
        if (node.exponent < 0)
          throw ParseError("negative exponent is not allowed here",
                           node.position);
        T base = self(self, *node.children[0]);
        T acc = embed_scalar(CycloNum(Rational(1)));
        for (long k = 0; k < node.exponent; ++k) acc = mul(acc, base);
        return acc;
      }
    }
    throw std::logic_error("unreachable expression kind");
  };
  return eval(eval, e);
}

// Scalar evaluation: no free variables allowed, division permitted.
inline CycloNum eval_scalar(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::number:
      return CycloNum(e.number);
    case Expr::Kind::zeta:
      return CycloNum::root_of_unity(e.zeta_order, 1);
    case Expr::Kind::variable:
      throw ParseError("variable '" + e.name + "' in a scalar context",
                       e.position);
    case Expr::Kind::add:
      return eval_scalar(*e.children[0]) + eval_scalar(*e.children[1]);
    case Expr::Kind::sub:
      return eval_scalar(*e.children[0]) - eval_scalar(*e.children[1]);
    case Expr::Kind::neg:
      return -eval_scalar(*e.children[0]);
    case Expr::Kind::mul:
      return eval_scalar(*e.children[0]) * eval_scalar(*e.children[1]);
    case Expr::Kind::div: {
      CycloNum den = eval_scalar(*e.children[1]);
      if (den.is_zero()) throw ParseError("division by zero", e.position);
      return eval_scalar(*e.children[0]) / den;
    }
    case Expr::Kind::pow: {
      CycloNum base = eval_scalar(*e.children[0]);
      if (e.exponent < 0 && base.is_zero())
        throw ParseError("zero raised to a negative power", e.position);
      return base.pow(e.exponent);
    }
  }
  throw std::logic_error("unreachable expression kind");
}

// Commutative polynomial evaluation.  Division is allowed only by nonzero
// scalars; negative powers only of nonzero scalar subexpressions.
inline MultiPoly eval_poly(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::number:
      return MultiPoly(CycloNum(e.number));
    case Expr::Kind::zeta:
      return MultiPoly(CycloNum::root_of_unity(e.zeta_order, 1));
    case Expr::Kind::variable:
      return MultiPoly::variable(e.name);
    case Expr::Kind::add:
      return eval_poly(*e.children[0]) + eval_poly(*e.children[1]);
    case Expr::Kind::sub:
      return eval_poly(*e.children[0]) - eval_poly(*e.children[1]);
    case Expr::Kind::neg:
      return -eval_poly(*e.children[0]);
    case Expr::Kind::mul:
      return eval_poly(*e.children[0]) * eval_poly(*e.children[1]);
    case Expr::Kind::div: {
      MultiPoly den = eval_poly(*e.children[1]);
      if (!den.is_constant())
        throw ParseError("polynomial division is only allowed by scalars",
                         e.position);
      CycloNum c = den.constant_value();
      if (c.is_zero()) throw ParseError("division by zero", e.position);
      return eval_poly(*e.children[0]).scaled(c.inverse());
    }
    case Expr::Kind::pow: {
      MultiPoly base = eval_poly(*e.children[0]);
      if (e.exponent >= 0)
        return base.pow(static_cast<unsigned>(e.exponent));
      if (!base.is_constant())
        throw ParseError("negative powers are only allowed on scalars",
                         e.position);
      CycloNum c = base.constant_value();
      if (c.is_zero())
        throw ParseError("zero raised to a negative power", e.position);
      return MultiPoly(c.pow(e.exponent));
    }
  }
  throw std::logic_error("unreachable expression kind");
}

inline CycloNum parse_scalar(const std::string& text) {
  return eval_scalar(*parse_expr(text));
}

inline MultiPoly parse_poly(const std::string& text) {
  return eval_poly(*parse_expr(text));
}

// Structural total degree of an expression tree: variables count 1, products
// add, sums require agreeing degrees.  Returns nullopt when the tree is
// inhomogeneous.  Scalar-only subtrees have degree 0.
inline std::optional<long> structural_degree(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::number:
    case Expr::Kind::zeta:
      return 0;
    case Expr::Kind::variable:
      return 1;
    case Expr::Kind::add:
    case Expr::Kind::sub: {
      auto l = structural_degree(*e.children[0]);
      auto r = structural_degree(*e.children[1]);
      if (!l || !r || *l != *r) return std::nullopt;
      return l;
    }
    case Expr::Kind::neg:
      return structural_degree(*e.children[0]);
    case Expr::Kind::mul: {
      auto l = structural_degree(*e.children[0]);
      auto r = structural_degree(*e.children[1]);
      if (!l || !r) return std::nullopt;
      return *l + *r;
    }
    case Expr::Kind::div: {
      auto l = structural_degree(*e.children[0]);
      auto r = structural_degree(*e.children[1]);
      if (!l || !r || *r != 0) return std::nullopt;
      return l;
    }
    case Expr::Kind::pow: {
      auto base = structural_degree(*e.children[0]);
      if (!base) return std::nullopt;
      if (*base == 0) return 0;
      if (e.exponent < 0) return std::nullopt;
      return *base * e.exponent;
    }
  }
  return std::nullopt;
}

// Enforces the fully parenthesized product grammar: a factor of a product
// may itself be a sum or product only when it was written in parentheses.
// Needed wherever reassociation would change the value.
inline void require_fully_parenthesized(const Expr& e) {
  auto is_compound = [](const Expr& n) {
    return n.kind == Expr::Kind::add || n.kind == Expr::Kind::sub ||
           n.kind == Expr::Kind::mul || n.kind == Expr::Kind::div;
  };
  if (e.kind == Expr::Kind::mul || e.kind == Expr::Kind::div) {
    for (const auto& child : e.children) {
      if (is_compound(*child) && !child->parenthesized)
        throw ParseError(
            "nested products must be explicitly parenthesized",
            child->position);
    }
  }
  for (const auto& child : e.children) require_fully_parenthesized(*child);
}

// Collects the distinct variable names appearing in a tree.
inline void collect_variables(const Expr& e, std::vector<std::string>& out) {
  if (e.kind == Expr::Kind::variable) {
    bool seen = false;
    for (const auto& name : out)
      if (name == e.name) seen = true;
    if (!seen) out.push_back(e.name);
  }
  for (const auto& child : e.children) collect_variables(*child, out);
}

// Group literals: "2x3x4" lists cyclic factor orders; "1" is the trivial
// group (empty factor list).
inline std::vector<unsigned> parse_group_spec(const std::string& text) {
  if (text == "1") return {};
  std::vector<unsigned> orders;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("expected a cyclic factor order", i);
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    unsigned long value = std::stoul(text.substr(start, i - start));
    if (value < 2)
      throw ParseError("cyclic factor orders must be at least 2", start);
    orders.push_back(static_cast<unsigned>(value));
    if (i < text.size()) {
      if (text[i] != 'x') throw ParseError("expected 'x' between factors", i);
      ++i;
      if (i == text.size())
        throw ParseError("trailing 'x' in group literal", i - 1);
    }
  }
  if (orders.empty()) throw ParseError("empty group literal", 0);
  return orders;
}

// Splits on top-level commas (commas inside parentheses do not split).
inline std::vector<std::string> split_top_level(const std::string& text,
                                                char separator) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string current;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == separator && depth == 0) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

}  // namespace sigmacheck

#endif  // SIGMACHECK_EXPR_HPP
