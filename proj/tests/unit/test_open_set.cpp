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

#include <set>
#include <specdom/errors.hpp>
#include <specdom/open_set.hpp>
#include <specdom/sampling.hpp>
#include <vector>

using namespace specdom;

namespace {

const Carrier kC(Rational(0), Rational(3));

OpenSet piece(const Carrier& c, long lo, long hi) {
  return OpenSet(c, {HalfOpenPiece::open(Rational(lo), Rational(hi))});
}

// Every piece endpoint plus the midpoints between consecutive ones.  Two
// canonical sets over the carrier agree as point sets iff they agree on
// these probes, so membership here is a complete oracle for the set
// algebra.
std::vector<Rational> probes(const Carrier& c,
                             const std::vector<OpenSet>& sets) {
  std::set<Rational> ends{c.lo, c.hi};
  for (const OpenSet& s : sets)
    for (const HalfOpenPiece& p : s.pieces()) {
      if (p.lower.has_value()) ends.insert(*p.lower);
      ends.insert(p.upper);
    }
  std::vector<Rational> sorted(ends.begin(), ends.end());
  std::vector<Rational> out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    out.push_back(sorted[i]);
    if (i + 1 < sorted.size())
      out.push_back(rat_mid(sorted[i], sorted[i + 1]));
  }
  return out;
}

}  // namespace

TEST_CASE("canonical form merges touching and overlapping pieces") {
  OpenSet adj(kC, {HalfOpenPiece::open(Rational(0), Rational(1)),
                   HalfOpenPiece::open(Rational(1), Rational(2))});
  CHECK(adj == piece(kC, 0, 2));
  CHECK(adj.pieces().size() == 1);

  OpenSet overlap(kC, {HalfOpenPiece::open(Rational(0), Rational(2)),
                       HalfOpenPiece::open(Rational(1), Rational(3))});
  CHECK(overlap == piece(kC, 0, 3));

  OpenSet gap(kC, {HalfOpenPiece::open(Rational(2), Rational(3)),
                   HalfOpenPiece::open(Rational(0), Rational(1))});
  CHECK(gap.pieces().size() == 2);
  CHECK(gap.pieces()[0] == HalfOpenPiece::open(Rational(0), Rational(1)));
  CHECK(gap.pieces()[1] == HalfOpenPiece::open(Rational(2), Rational(3)));

  // A left-end piece fuses with an open piece that starts at its end.
  OpenSet leftend(kC, {HalfOpenPiece::from_left_end(Rational(1)),
                       HalfOpenPiece::open(Rational(1), Rational(2))});
  CHECK(leftend ==
        OpenSet(kC, {HalfOpenPiece::from_left_end(Rational(2))}));
}

TEST_CASE("malformed pieces are rejected") {
  CHECK_THROWS_AS(piece(kC, 2, 1), MalformedInterval);
  CHECK_THROWS_AS(piece(kC, 1, 1), MalformedInterval);
  // Entirely below the carrier: empty after clipping.
  CHECK_THROWS_AS(
      OpenSet(kC, {HalfOpenPiece::open(Rational(-5), Rational(-1))}),
      MalformedInterval);
  CHECK_THROWS_AS(Carrier(Rational(2), Rational(1)), MalformedInterval);
  CHECK_THROWS_AS(Carrier(Rational(1), Rational(1)), MalformedInterval);
}

TEST_CASE("pieces clip to the carrier") {
  // Reaching past the left end turns into a closed-at-the-left-end trace.
  OpenSet low(kC, {HalfOpenPiece::open(Rational(-1), Rational(2))});
  CHECK(low == OpenSet(kC, {HalfOpenPiece::from_left_end(Rational(2))}));
  CHECK(low.contains(Rational(0)));

  OpenSet high(kC, {HalfOpenPiece::open(Rational(1), Rational(7))});
  CHECK(high == piece(kC, 1, 3));

  // The left-end singleton is the trace of anything ending exactly at lo.
  OpenSet dot(kC, {HalfOpenPiece::open(Rational(-1), Rational(0))});
  CHECK(dot == OpenSet(kC, {HalfOpenPiece::from_left_end(Rational(0))}));
  CHECK(dot.contains(Rational(0)));
  CHECK_FALSE(dot.contains(Rational(1, 100)));
  CHECK(dot.str() == "{0}");
}

TEST_CASE("membership respects half-open ends") {
  OpenSet s = piece(kC, 0, 1);
  CHECK(s.contains(Rational(1)));
  CHECK_FALSE(s.contains(Rational(0)));
  CHECK(s.contains(Rational(1, 2)));
  CHECK_FALSE(s.contains(Rational(2)));
  CHECK_THROWS_AS(s.contains(Rational(4)), PointOutsideCarrier);
  CHECK_THROWS_AS(s.contains(Rational(-1)), PointOutsideCarrier);
}

TEST_CASE("empty and full") {
  OpenSet e = OpenSet::empty(kC);
  CHECK(e.is_empty());
  CHECK_FALSE(e.contains(Rational(1)));
  CHECK(e.str() == "{}");
  OpenSet f = OpenSet::full(kC);
  CHECK(f.is_full());
  CHECK(f.contains(Rational(0)));
  CHECK(f.contains(Rational(3)));
  CHECK(f.contains(Rational(1, 7)));
}

TEST_CASE("set algebra on worked pieces") {
  OpenSet a = piece(kC, 0, 2);
  OpenSet b = piece(kC, 1, 3);
  CHECK(set_union(a, b) == piece(kC, 0, 3));
  CHECK(set_intersect(a, b) == piece(kC, 1, 2));
  CHECK(set_intersect(piece(kC, 0, 1), piece(kC, 2, 3)).is_empty());
  CHECK(is_subset(piece(kC, 1, 2), a));
  CHECK_FALSE(is_subset(a, b));
  CHECK(is_subset(OpenSet::empty(kC), a));
  CHECK(is_subset(a, OpenSet::full(kC)));

  Carrier other(Rational(0), Rational(5));
  CHECK_THROWS_AS(set_union(a, piece(other, 0, 2)), CarrierMismatch);
  CHECK_THROWS_AS(set_intersect(a, piece(other, 0, 2)), CarrierMismatch);
  CHECK_THROWS_AS(is_subset(a, piece(other, 0, 2)), CarrierMismatch);
}

TEST_CASE("set algebra agrees with pointwise membership") {
  Sampler s(21);
  for (int i = 0; i < 300; ++i) {
    OpenSet a = s.open_set(kC);
    OpenSet b = s.open_set(kC);
    OpenSet u = set_union(a, b);
    OpenSet n = set_intersect(a, b);
    bool sub = is_subset(a, b);
    for (const Rational& x : probes(kC, {a, b, u, n})) {
      bool ina = a.contains(x), inb = b.contains(x);
      CHECK(u.contains(x) == (ina || inb));
      CHECK(n.contains(x) == (ina && inb));
      if (ina && !inb) CHECK_FALSE(sub);
    }
    // Ring laws on canonical representations.
    CHECK(set_union(a, b) == set_union(b, a));
    CHECK(set_intersect(a, b) == set_intersect(b, a));
    CHECK(set_union(a, set_intersect(a, b)) == a);
    CHECK(set_intersect(a, set_union(a, b)) == a);
    OpenSet c = s.open_set(kC);
    CHECK(set_intersect(a, set_union(b, c)) ==
          set_union(set_intersect(a, b), set_intersect(a, c)));
    CHECK(set_union(a, set_intersect(b, c)) ==
          set_intersect(set_union(a, b), set_union(a, c)));
    CHECK(is_subset(a, b) == (set_union(a, b) == b));
    CHECK(is_subset(a, b) == (set_intersect(a, b) == a));
  }
}

TEST_CASE("cells refine the inputs") {
  OpenSet a = piece(kC, 0, 2);
  OpenSet b = piece(kC, 1, 3);
  std::vector<OpenSet> cs = cells(kC, {a, b});
  REQUIRE(cs.size() == 4);
  CHECK(cs[0] == OpenSet(kC, {HalfOpenPiece::from_left_end(Rational(0))}));
  CHECK(cs[1] == piece(kC, 0, 1));
  CHECK(cs[2] == piece(kC, 1, 2));
  CHECK(cs[3] == piece(kC, 2, 3));

  std::vector<OpenSet> none = cells(kC, {});
  REQUIRE(none.size() == 2);
  CHECK(none[0] == OpenSet(kC, {HalfOpenPiece::from_left_end(Rational(0))}));
  CHECK(none[1] == piece(kC, 0, 3));
}

TEST_CASE("cell representatives") {
  std::vector<OpenSet> cs = cells(kC, {piece(kC, 0, 2)});
  REQUIRE(cs.size() == 3);
  CHECK(cell_representative(cs[0]) == Rational(0));
  CHECK(cell_representative(cs[1]) == Rational(2));
  CHECK(cell_representative(cs[2]) == Rational(3));
}

TEST_CASE("cells partition the carrier and inputs are constant on them") {
  Sampler s(22);
  for (int i = 0; i < 120; ++i) {
    std::vector<OpenSet> ins = s.generators(kC, s.uniform_int(0, 3));
    std::vector<OpenSet> cs = cells(kC, ins);
    for (const Rational& x : probes(kC, ins)) {
      int hits = 0;
      for (const OpenSet& c : cs) hits += c.contains(x) ? 1 : 0;
      CHECK(hits == 1);  // disjoint cover
    }
    for (const OpenSet& c : cs) {
      REQUIRE_FALSE(c.is_empty());
      Rational rep = cell_representative(c);
      CHECK(c.contains(rep));
      for (const OpenSet& in : ins) {
        bool at_rep = in.contains(rep);
        for (const Rational& x : probes(kC, {c, in}))
          if (c.contains(x)) CHECK(in.contains(x) == at_rep);
      }
    }
  }
}
