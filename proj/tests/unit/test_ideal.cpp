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
#include <specdom/ideal.hpp>
#include <specdom/sampling.hpp>

using namespace specdom;

namespace {

const Carrier kC(Rational(0), Rational(3));

PrincipalIdeal down(long lo, long hi) {
  return PrincipalIdeal{
      OpenSet(kC, {HalfOpenPiece::open(Rational(lo), Rational(hi))})};
}

}  // namespace

TEST_CASE("ideal order is generator inclusion") {
  CHECK(ideal_leq(down(0, 1), down(0, 2)));
  CHECK_FALSE(ideal_leq(down(0, 2), down(0, 1)));
  CHECK(ideal_leq(down(0, 1), down(0, 1)));
  CHECK(ideal_leq(PrincipalIdeal{OpenSet::empty(kC)}, down(0, 1)));
  CHECK(ideal_leq(down(0, 1), PrincipalIdeal{OpenSet::full(kC)}));
}

TEST_CASE("principal ideals are finite elements") {
  // Way-below and the order coincide on them, in both directions.
  CHECK(ideal_way_below(down(0, 1), down(0, 2)));
  CHECK(ideal_way_below(down(0, 1), down(0, 1)));
  CHECK_FALSE(ideal_way_below(down(0, 2), down(0, 1)));
  Sampler s(41);
  for (int i = 0; i < 1000; ++i) {
    PrincipalIdeal a{s.open_set(kC)}, b{s.open_set(kC)};
    CHECK(ideal_way_below(a, b) == ideal_leq(a, b));
    CHECK(ideal_leq(a, b) == is_subset(a.gen, b.gen));
  }
}

TEST_CASE("ideal join and meet reduce to the generators") {
  CHECK(ideal_join(down(0, 1), down(1, 2)) == down(0, 2));
  CHECK(ideal_meet(down(0, 2), down(1, 3)) == down(1, 2));
  Sampler s(42);
  for (int i = 0; i < 500; ++i) {
    PrincipalIdeal a{s.open_set(kC)}, b{s.open_set(kC)};
    PrincipalIdeal j = ideal_join(a, b);
    PrincipalIdeal m = ideal_meet(a, b);
    CHECK(j.gen == set_union(a.gen, b.gen));
    CHECK(m.gen == set_intersect(a.gen, b.gen));
    // Least upper bound / greatest lower bound against the order.
    CHECK(ideal_leq(a, j));
    CHECK(ideal_leq(b, j));
    CHECK(ideal_leq(m, a));
    CHECK(ideal_leq(m, b));
  }
}

TEST_CASE("trace membership is generator membership") {
  PrincipalIdeal a = down(0, 1);
  CHECK(iota_mem(Rational(1), a));
  CHECK_FALSE(iota_mem(Rational(0), a));
  CHECK(iota_mem(Rational(1, 2), a));
  CHECK_FALSE(iota_mem(Rational(2), a));
  CHECK_THROWS_AS(iota_mem(Rational(7), a), PointOutsideCarrier);
}

TEST_CASE("traces separate carrier points") {
  // For distinct points some ideal catches exactly one of them.
  std::vector<Rational> pts = {Rational(0), Rational(1, 3), Rational(1),
                               Rational(5, 2), Rational(3)};
  for (const Rational& x : pts)
    for (const Rational& y : pts) {
      if (x == y) continue;
      const Rational& lo = rat_min(x, y);
      const Rational& hi = rat_max(x, y);
      PrincipalIdeal w{OpenSet(kC, {HalfOpenPiece::open(lo, hi)})};
      CHECK(iota_mem(hi, w));
      CHECK_FALSE(iota_mem(lo, w));
    }
}

TEST_CASE("trace membership is monotone along the ideal order") {
  Sampler s(43);
  for (int i = 0; i < 300; ++i) {
    PrincipalIdeal a{s.open_set(kC)}, b{s.open_set(kC)};
    if (!ideal_leq(a, b)) continue;
    Rational x = s.rational_in(kC.lo, kC.hi);
    if (iota_mem(x, a)) CHECK(iota_mem(x, b));
  }
}
