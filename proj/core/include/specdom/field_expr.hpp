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

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "specdom/box.hpp"

namespace specdom {

// Polynomial vector fields over rational coefficients: constants, the state
// variables y1..yn, negation, sums, differences, products.  No division —
// fields stay total, and interval evaluation stays exact.
enum class ExprKind { Const, Var, Neg, Add, Sub, Mul };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  ExprKind kind;
  Rational value{0};   // Const payload
  int var = 0;         // Var payload: 0-based component index
  ExprPtr a, b;        // Neg uses a; Add/Sub/Mul use a and b
};

ExprPtr expr_const(Rational v);
ExprPtr expr_var(int index);
ExprPtr expr_neg(ExprPtr a);
ExprPtr expr_add(ExprPtr a, ExprPtr b);
ExprPtr expr_sub(ExprPtr a, ExprPtr b);
ExprPtr expr_mul(ExprPtr a, ExprPtr b);

// One expression per state component, semicolon-separated in text form.
class VectorField {
 public:
  VectorField(std::vector<ExprPtr> comps, std::string source);

  int dim() const { return static_cast<int>(comps_.size()); }
  const std::vector<ExprPtr>& components() const { return comps_; }
  // The text the field was built from (normalized input); for reports.
  const std::string& source() const { return source_; }

 private:
  std::vector<ExprPtr> comps_;
  std::string source_;
};

// Parses "y2; -y1" style text.  Grammar (whitespace-insensitive):
//   field   := expr (';' expr)*
//   expr    := term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := '-' factor | primary
//   primary := rational | variable | '(' expr ')'
//   rational:= digits ('/' digits)?
//   variable:= 'y' digits          (1-based; must not exceed the arity)
// The arity is the number of components; every variable must refer to one of
// them.  Throws ParseError with a byte offset into `text`.
VectorField parse_field(const std::string& text);

// Interval extension: evaluates every component over the box using exact
// rational interval arithmetic.  Inclusion-monotone by construction.
// Throws BottomInput for the bottom box and DimensionMismatch when the box
// arity differs from the field's.
Box eval_field(const VectorField& field, const Box& x);

// Point evaluation, for oracles and tests.
std::vector<Rational> eval_field_point(const VectorField& field,
                                       const std::vector<Rational>& y);

}  // namespace specdom
