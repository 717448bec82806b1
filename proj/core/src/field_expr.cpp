// Copyright 2026 The specdom Authors
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

#include "specdom/field_expr.hpp"

#include <cctype>
#include <utility>

#include "specdom/errors.hpp"

namespace specdom {

ExprPtr expr_const(Rational v) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Const;
  e->value = std::move(v);
  return e;
}

ExprPtr expr_var(int index) {
  if (index < 0) throw InvalidArgument("variable index must be non-negative");
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Var;
  e->var = index;
  return e;
}

namespace {

ExprPtr unary(ExprKind k, ExprPtr a) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->a = std::move(a);
  return e;
}

ExprPtr binary(ExprKind k, ExprPtr a, ExprPtr b) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->a = std::move(a);
  e->b = std::move(b);
  return e;
}

}  // namespace

ExprPtr expr_neg(ExprPtr a) { return unary(ExprKind::Neg, std::move(a)); }
ExprPtr expr_add(ExprPtr a, ExprPtr b) {
  return binary(ExprKind::Add, std::move(a), std::move(b));
}
ExprPtr expr_sub(ExprPtr a, ExprPtr b) {
  return binary(ExprKind::Sub, std::move(a), std::move(b));
}
ExprPtr expr_mul(ExprPtr a, ExprPtr b) {
  return binary(ExprKind::Mul, std::move(a), std::move(b));
}

VectorField::VectorField(std::vector<ExprPtr> comps, std::string source)
    : comps_(std::move(comps)), source_(std::move(source)) {
  if (comps_.empty())
    throw InvalidArgument("a vector field needs at least one component");
  for (const auto& c : comps_)
    if (!c) throw InvalidArgument("null field component");
}

namespace {

// Recursive-descent parser over a byte cursor.
class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  std::vector<ExprPtr> parse() {
    std::vector<ExprPtr> comps;
    comps.push_back(parse_expr());
    while (peek() == ';') {
      ++pos_;
      comps.push_back(parse_expr());
    }
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("unexpected trailing input", pos_);
    return comps;
  }

  // Largest variable index seen, for the arity check.
  int max_var() const { return max_var_; }

 private:
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  ExprPtr parse_expr() {
    ExprPtr lhs = parse_term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      ExprPtr rhs = parse_term();
      lhs = c == '+' ? expr_add(std::move(lhs), std::move(rhs))
                     : expr_sub(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  ExprPtr parse_term() {
    ExprPtr lhs = parse_factor();
    while (peek() == '*') {
      ++pos_;
      lhs = expr_mul(std::move(lhs), parse_factor());
    }
    return lhs;
  }

  ExprPtr parse_factor() {
    if (peek() == '-') {
      ++pos_;
      return expr_neg(parse_factor());
    }
    return parse_primary();
  }

  ExprPtr parse_primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      ExprPtr inner = parse_expr();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (c == 'y') return parse_variable();
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_rational();
    throw ParseError("expected a number, a variable, or '('", pos_);
  }

  ExprPtr parse_variable() {
    std::size_t start = pos_;
    ++pos_;  // consume 'y'
    std::size_t digits = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == digits)
      throw ParseError("variable needs an index, like y1", start);
    long index = 0;
    for (std::size_t i = digits; i < pos_; ++i) {
      index = index * 10 + (text_[i] - '0');
      if (index > 1'000'000)
        throw ParseError("variable index out of range", start);
    }
    if (index < 1)
      throw ParseError("variable indices start at y1", start);
    if (static_cast<int>(index) > max_var_) max_var_ = static_cast<int>(index);
    return expr_var(static_cast<int>(index) - 1);
  }

  ExprPtr parse_rational() {
    std::size_t start = pos_;
    auto grab_digits = [&] {
      std::size_t from = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (pos_ == from) throw ParseError("expected digits", pos_);
      return text_.substr(from, pos_ - from);
    };
    std::string num = grab_digits();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      std::string den = grab_digits();
      if (Rational::parse(den) == Rational(0))
        throw ParseError("denominator is zero", start);
      return expr_const(Rational::parse(num + "/" + den));
    }
    return expr_const(Rational::parse(num));
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int max_var_ = 0;
};

using Interval = Box::Interval;

Interval eval_expr(const Expr& e, const Box& x) {
  switch (e.kind) {
    case ExprKind::Const:
      return {e.value, e.value};
    case ExprKind::Var:
      return x.dims().at(e.var);
    case ExprKind::Neg: {
      Interval a = eval_expr(*e.a, x);
      return {-a.second, -a.first};
    }
    case ExprKind::Add: {
      Interval a = eval_expr(*e.a, x), b = eval_expr(*e.b, x);
      return {a.first + b.first, a.second + b.second};
    }
    case ExprKind::Sub: {
      Interval a = eval_expr(*e.a, x), b = eval_expr(*e.b, x);
      return {a.first - b.second, a.second - b.first};
    }
    case ExprKind::Mul: {
      Interval a = eval_expr(*e.a, x), b = eval_expr(*e.b, x);
      Rational p1 = a.first * b.first, p2 = a.first * b.second;
      Rational p3 = a.second * b.first, p4 = a.second * b.second;
      return {rat_min(rat_min(p1, p2), rat_min(p3, p4)),
              rat_max(rat_max(p1, p2), rat_max(p3, p4))};
    }
  }
  throw InvalidArgument("unknown expression kind");
}

Rational eval_expr_point(const Expr& e, const std::vector<Rational>& y) {
  switch (e.kind) {
    case ExprKind::Const:
      return e.value;
    case ExprKind::Var:
      return y.at(e.var);
    case ExprKind::Neg:
      return -eval_expr_point(*e.a, y);
    case ExprKind::Add:
      return eval_expr_point(*e.a, y) + eval_expr_point(*e.b, y);
    case ExprKind::Sub:
      return eval_expr_point(*e.a, y) - eval_expr_point(*e.b, y);
    case ExprKind::Mul:
      return eval_expr_point(*e.a, y) * eval_expr_point(*e.b, y);
  }
  throw InvalidArgument("unknown expression kind");
}

}  // namespace

VectorField parse_field(const std::string& text) {
  Parser p(text);
  std::vector<ExprPtr> comps = p.parse();
  if (p.max_var() > static_cast<int>(comps.size()))
    throw ParseError("variable y" + std::to_string(p.max_var()) +
                         " exceeds the field arity " +
                         std::to_string(comps.size()),
                     0);
  return VectorField(std::move(comps), text);
}

Box eval_field(const VectorField& field, const Box& x) {
  if (x.is_bottom())
    throw BottomInput("field evaluation needs a bounded box");
  if (x.dim() != field.dim())
    throw DimensionMismatch("box arity differs from field arity");
  std::vector<Interval> out;
  out.reserve(field.components().size());
  for (const auto& c : field.components()) out.push_back(eval_expr(*c, x));
  return Box::make(std::move(out));
}

std::vector<Rational> eval_field_point(const VectorField& field,
                                       const std::vector<Rational>& y) {
  if (static_cast<int>(y.size()) != field.dim())
    throw DimensionMismatch("point arity differs from field arity");
  std::vector<Rational> out;
  out.reserve(field.components().size());
  for (const auto& c : field.components())
    out.push_back(eval_expr_point(*c, y));
  return out;
}

}  // namespace specdom
