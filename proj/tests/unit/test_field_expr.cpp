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

#include <doctest.h>

#include <specdom/errors.hpp>
#include <specdom/field_expr.hpp>
#include <specdom/sampling.hpp>

using namespace specdom;

TEST_CASE("parsing shapes and arity") {
  VectorField one = parse_field("y1");
  CHECK(one.dim() == 1);
  CHECK(one.components()[0]->kind == ExprKind::Var);
  CHECK(one.components()[0]->var == 0);

  VectorField two = parse_field("-1*y2; y1");
  CHECK(two.dim() == 2);
  CHECK(two.source() == "-1*y2; y1");

  CHECK(parse_field(" 1/2 + y1 * ( y1 - 3 ) ").dim() == 1);
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse_field(""), ParseError);
  CHECK_THROWS_AS(parse_field("y1 +"), ParseError);
  CHECK_THROWS_AS(parse_field("(y1"), ParseError);
  CHECK_THROWS_AS(parse_field("y1)"), ParseError);
  CHECK_THROWS_AS(parse_field("1/0"), ParseError);
  CHECK_THROWS_AS(parse_field("y0"), ParseError);
  CHECK_THROWS_AS(parse_field("y"), ParseError);
  CHECK_THROWS_AS(parse_field("x1"), ParseError);
  CHECK_THROWS_AS(parse_field("y1 y2"), ParseError);
  CHECK_THROWS_AS(parse_field("y1;;y1"), ParseError);
  // A variable may not exceed the component count.
  CHECK_THROWS_AS(parse_field("y3; y1"), ParseError);
  try {
    parse_field("y1 + @");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position == 5);
  }
}

TEST_CASE("point evaluation follows the grammar") {
  auto at = [](const std::string& src, std::vector<Rational> y) {
    return eval_field_point(parse_field(src), y);
  };
  CHECK(at("1+2*3", {Rational(0)})[0] == Rational(7));
  CHECK(at("(1+2)*3", {Rational(0)})[0] == Rational(9));
  CHECK(at("-y1*y1", {Rational(2)})[0] == Rational(-4));
  CHECK(at("y1-y1-y1", {Rational(5)})[0] == Rational(-5));
  CHECK(at("1/2 - 1/3", {Rational(0)})[0] == Rational(1, 6));
  auto rot = at("y2; -y1", {Rational(3), Rational(4)});
  CHECK(rot[0] == Rational(4));
  CHECK(rot[1] == Rational(-3));
  CHECK_THROWS_AS(at("y1", {Rational(1), Rational(2)}), DimensionMismatch);
}

TEST_CASE("interval evaluation on the square example") {
  VectorField sq = parse_field("y1*y1");
  Box in = Box::interval(Rational(-1), Rational(2));
  CHECK(eval_field(sq, in) == Box::interval(Rational(-2), Rational(4)));
  CHECK(eval_field(sq, Box::interval(Rational(2), Rational(3))) ==
        Box::interval(Rational(4), Rational(9)));
  CHECK(eval_field(sq, Box::interval(Rational(-3), Rational(-2))) ==
        Box::interval(Rational(4), Rational(9)));
  CHECK_THROWS_AS(eval_field(sq, Box::bottom()), BottomInput);
  CHECK_THROWS_AS(eval_field(sq, Box::make({{Rational(0), Rational(1)},
                                            {Rational(0), Rational(1)}})),
                  DimensionMismatch);
  VectorField c = parse_field("3/2");
  CHECK(eval_field(c, Box::interval(Rational(-9), Rational(9))) ==
        Box::interval(Rational(3, 2), Rational(3, 2)));
}

TEST_CASE("interval extension contains all point values") {
  Sampler s(71);
  VectorField f = parse_field("y1*y2 - y2*y2 + 2*y1; y1 - 1/2*y2");
  for (int i = 0; i < 300; ++i) {
    Box b = s.box(2);
    Box out = eval_field(f, b);
    for (int corner = 0; corner < 4; ++corner) {
      std::vector<Rational> p = {
          (corner & 1) ? b.high(0) : b.low(0),
          (corner & 2) ? b.high(1) : b.low(1),
      };
      std::vector<Rational> v = eval_field_point(f, p);
      for (int d = 0; d < 2; ++d) {
        CHECK(out.low(d) <= v[d]);
        CHECK(v[d] <= out.high(d));
      }
    }
    std::vector<Rational> mid = {rat_mid(b.low(0), b.high(0)),
                                 rat_mid(b.low(1), b.high(1))};
    std::vector<Rational> v = eval_field_point(f, mid);
    for (int d = 0; d < 2; ++d) {
      CHECK(out.low(d) <= v[d]);
      CHECK(v[d] <= out.high(d));
    }
  }
}

TEST_CASE("interval evaluation is inclusion monotone") {
  Sampler s(72);
  VectorField f = parse_field("y1*y1 - 3*y2; y2*y2*y1");
  for (int i = 0; i < 300; ++i) {
    Box inner = s.box(2);
    Box outer = box_inflate(inner, s.rational_in(Rational(0), Rational(2)));
    // A wider input can only widen the output.
    CHECK(box_leq(eval_field(f, outer), eval_field(f, inner)));
  }
}

TEST_CASE("expression factories validate") {
  CHECK_THROWS_AS(expr_var(-1), InvalidArgument);
  CHECK_THROWS_AS(VectorField({}, ""), InvalidArgument);
  CHECK_THROWS_AS(VectorField({nullptr}, "x"), InvalidArgument);
  VectorField ok({expr_add(expr_var(0), expr_const(Rational(1, 2)))}, "hand");
  CHECK(eval_field_point(ok, {Rational(1, 2)})[0] == Rational(1));
}
