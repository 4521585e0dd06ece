// Copyright 2026 The merohecke Authors.
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

#include "merohecke/expression.hpp"

#include <cctype>
#include <vector>

#include "merohecke/errors.hpp"

namespace merohecke {

struct Formula::Node {
  enum class Op { Number, Q, Eisenstein, Delta, J, Name, Neg, Add, Sub, Mul, Div, Pow };
  Op op = Op::Number;
  Integer number;
  std::int64_t exponent = 0;  // Eisenstein weight or Pow exponent
  std::string name;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using Node = Formula::Node;
using NodePtr = std::shared_ptr<const Node>;

struct Token {
  enum class Kind { Number, Ident, Symbol, End };
  Kind kind = Kind::End;
  std::string text;
  std::size_t pos = 0;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      const auto start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Token::Kind::Number, std::string(s.substr(start, i - start)), start});
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const auto start = i;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Token::Kind::Ident, std::string(s.substr(start, i - start)), start});
    } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
      out.push_back({Token::Kind::Symbol, std::string(1, c), i});
      ++i;
    } else {
      throw ParseError("unexpected character '" + std::string(1, c) + "' at offset " +
                       std::to_string(i));
    }
  }
  out.push_back({Token::Kind::End, "", s.size()});
  return out;
}

NodePtr make(Node::Op op, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

// expr   := term (('+' | '-') term)*
// term   := unary (('*' | '/')? unary)*      juxtaposition multiplies
// unary  := '-' unary | power
// power  := atom ('^' '-'? integer)?
// atom   := integer | identifier | '(' expr ')'
class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  NodePtr parse() {
    auto root = expr();
    if (peek().kind != Token::Kind::End) fail("unexpected '" + peek().text + "'");
    return root;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool accept(const char* symbol) {
    if (peek().kind == Token::Kind::Symbol && peek().text == symbol) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("formula: " + what + " at offset " + std::to_string(peek().pos));
  }

  NodePtr expr() {
    auto node = term();
    while (true) {
      if (accept("+")) {
        node = make(Node::Op::Add, node, term());
      } else if (accept("-")) {
        node = make(Node::Op::Sub, node, term());
      } else {
        return node;
      }
    }
  }

  bool starts_atom() const {
    const auto& t = peek();
    return t.kind == Token::Kind::Number || t.kind == Token::Kind::Ident ||
           (t.kind == Token::Kind::Symbol && t.text == "(");
  }

  NodePtr term() {
    auto node = unary();
    while (true) {
      if (accept("*")) {
        node = make(Node::Op::Mul, node, unary());
      } else if (accept("/")) {
        node = make(Node::Op::Div, node, unary());
      } else if (starts_atom()) {
        node = make(Node::Op::Mul, node, power());
      } else {
        return node;
      }
    }
  }

  NodePtr unary() {
    if (accept("-")) return make(Node::Op::Neg, unary());
    return power();
  }

  NodePtr power() {
    auto base = atom();
    if (!accept("^")) return base;
    const bool negative = accept("-");
    if (peek().kind != Token::Kind::Number) fail("expected an integer exponent");
    auto node = std::make_shared<Node>();
    node->op = Node::Op::Pow;
    node->lhs = base;
    try {
      node->exponent = std::stoll(peek().text);
    } catch (const std::out_of_range&) {
      fail("exponent out of range");
    }
    if (negative) node->exponent = -node->exponent;
    ++pos_;
    return node;
  }

  NodePtr atom() {
    const auto& t = peek();
    if (accept("(")) {
      auto inner = expr();
      if (!accept(")")) fail("expected ')'");
      return inner;
    }
    auto node = std::make_shared<Node>();
    if (t.kind == Token::Kind::Number) {
      node->op = Node::Op::Number;
      node->number = Integer(t.text, 10);
    } else if (t.kind == Token::Kind::Ident) {
      if (t.text == "q") {
        node->op = Node::Op::Q;
      } else if (t.text == "Delta") {
        node->op = Node::Op::Delta;
      } else if (t.text == "j") {
        node->op = Node::Op::J;
      } else if (t.text.size() > 1 && t.text[0] == 'E' &&
                 t.text.find_first_not_of("0123456789", 1) == std::string::npos) {
        node->op = Node::Op::Eisenstein;
        node->exponent = std::stoll(t.text.substr(1));
        if (node->exponent < 4 || node->exponent % 2 != 0) {
          fail("Eisenstein series need an even weight >= 4");
        }
      } else {
        node->op = Node::Op::Name;
        node->name = t.text;
      }
    } else {
      fail(t.kind == Token::Kind::End ? "unexpected end of formula" : "unexpected '" + t.text + "'");
    }
    ++pos_;
    return node;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

using Kind = FormulaWeight::Kind;

FormulaWeight add_weights(FormulaWeight a, FormulaWeight b) {
  if (a.kind == Kind::Mixed || b.kind == Kind::Mixed) return {Kind::Mixed, 0};
  if (a.kind == Kind::Scalar && b.kind == Kind::Scalar) return a;
  if (a.kind == Kind::Modular && b.kind == Kind::Modular) {
    return a.weight == b.weight ? a : FormulaWeight{Kind::Mixed, 0};
  }
  const auto modular = a.kind == Kind::Modular ? a : b;
  return modular.weight == 0 ? modular : FormulaWeight{Kind::Mixed, 0};
}

FormulaWeight mul_weights(FormulaWeight a, FormulaWeight b, int sign) {
  if (a.kind == Kind::Mixed || b.kind == Kind::Mixed) return {Kind::Mixed, 0};
  if (b.kind == Kind::Scalar) return a;
  if (a.kind == Kind::Scalar) return {Kind::Modular, sign * b.weight};
  return {Kind::Modular, a.weight + sign * b.weight};
}

// Power of Delta times a scalar: dividing by it keeps the expansion valid on
// all of the upper half-plane.
bool is_delta_monomial(const Node& n) {
  switch (n.op) {
    case Node::Op::Number:
    case Node::Op::Delta:
    case Node::Op::Q:
      return true;
    case Node::Op::Neg:
    case Node::Op::Pow:
      return is_delta_monomial(*n.lhs);
    case Node::Op::Mul:
      return is_delta_monomial(*n.lhs) && is_delta_monomial(*n.rhs);
    default:
      return false;
  }
}

FormulaValue eval(const Node& n, std::int64_t w, const NameResolver& resolver) {
  switch (n.op) {
    case Node::Op::Number:
      return {LaurentSeries::constant(Rational(n.number), w), {Kind::Scalar, 0}, false};
    case Node::Op::Q:
      return {LaurentSeries::monomial(1, Rational(1), w), {Kind::Mixed, 0}, false};
    case Node::Op::Eisenstein:
      return {eisenstein(static_cast<int>(n.exponent), w).series,
              {Kind::Modular, static_cast<int>(n.exponent)}, false};
    case Node::Op::Delta:
      return {delta(w).series, {Kind::Modular, 12}, false};
    case Node::Op::J:
      return {j_function(w).series, {Kind::Modular, 0}, false};
    case Node::Op::Name: {
      std::optional<ModularFormSeries> form;
      if (resolver) form = resolver(n.name, w);
      if (!form) throw ParseError("formula: unknown name '" + n.name + "'");
      return {form->series, {Kind::Modular, form->weight}, false};
    }
    case Node::Op::Neg: {
      auto v = eval(*n.lhs, w, resolver);
      v.series = negate(v.series);
      return v;
    }
    case Node::Op::Add:
    case Node::Op::Sub: {
      auto a = eval(*n.lhs, w, resolver);
      auto b = eval(*n.rhs, w, resolver);
      return {n.op == Node::Op::Add ? add(a.series, b.series) : subtract(a.series, b.series),
              add_weights(a.weight, b.weight), a.meromorphic || b.meromorphic};
    }
    case Node::Op::Mul: {
      auto a = eval(*n.lhs, w, resolver);
      auto b = eval(*n.rhs, w, resolver);
      return {mul(a.series, b.series), mul_weights(a.weight, b.weight, 1),
              a.meromorphic || b.meromorphic};
    }
    case Node::Op::Div: {
      auto a = eval(*n.lhs, w, resolver);
      auto b = eval(*n.rhs, w, resolver);
      return {div(a.series, b.series), mul_weights(a.weight, b.weight, -1),
              a.meromorphic || b.meromorphic || !is_delta_monomial(*n.rhs)};
    }
    case Node::Op::Pow: {
      auto a = eval(*n.lhs, w, resolver);
      FormulaWeight weight = a.weight;
      if (weight.kind == Kind::Modular) weight.weight *= static_cast<int>(n.exponent);
      const bool meromorphic = a.meromorphic || (n.exponent < 0 && !is_delta_monomial(*n.lhs));
      return {pow(a.series, n.exponent), weight, meromorphic};
    }
  }
  throw Error("formula: corrupt syntax tree");
}

}  // namespace

Formula Formula::parse(std::string_view text) {
  Formula f;
  f.text_ = std::string(text);
  f.root_ = Parser(text).parse();
  return f;
}

FormulaValue Formula::evaluate(std::int64_t precision, const NameResolver& resolver) const {
  // Building blocks are only meaningful from O(q^1) on.
  std::int64_t working = std::max<std::int64_t>(precision, 1);
  constexpr int kAttempts = 8;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    FormulaValue value;
    try {
      value = eval(*root_, working, resolver);
    } catch (const ZeroLeadingCoefficient&) {
      // A divisor vanished to the working precision; a genuinely zero
      // divisor keeps vanishing and rethrows on the last attempt.
      if (attempt + 1 == kAttempts) throw;
      working += std::max<std::int64_t>(4, working);
      continue;
    }
    const auto reached = value.series.precision();
    if (reached >= precision) {
      value.series = truncate(value.series, precision);
      return value;
    }
    working += precision - reached;
  }
  throw InsufficientPrecision("formula '" + text_ + "' cannot reach O(q^" +
                              std::to_string(precision) + ")");
}

FormulaValue evaluate_formula(std::string_view text, std::int64_t precision,
                              const NameResolver& resolver) {
  return Formula::parse(text).evaluate(precision, resolver);
}

}  // namespace merohecke
