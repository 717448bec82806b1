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

#include <algorithm>
#include <set>
#include <specdom/errors.hpp>
#include <specdom/lattice.hpp>
#include <specdom/sampling.hpp>
#include <vector>

using namespace specdom;

namespace {

const Carrier kC(Rational(0), Rational(3));

OpenSet piece(long lo, long hi) {
  return OpenSet(kC, {HalfOpenPiece::open(Rational(lo), Rational(hi))});
}

// Number of distinct generator-membership patterns over the joint cells:
// the occupied regions of the generators' Venn diagram inside the carrier.
int venn_cell_count(const Carrier& c, const std::vector<OpenSet>& gens) {
  std::set<std::vector<bool>> patterns;
  for (const OpenSet& cell : cells(c, gens)) {
    Rational rep = cell_representative(cell);
    std::vector<bool> pat;
    pat.reserve(gens.size());
    for (const OpenSet& g : gens) pat.push_back(g.contains(rep));
    patterns.insert(std::move(pat));
  }
  return static_cast<int>(patterns.size());
}

}  // namespace

TEST_CASE("two-element chain from an order matrix") {
  FinDistLattice L = FinDistLattice::from_leq(
      {"bot", "top"}, {{true, true}, {false, true}}, std::nullopt);
  CHECK(L.size() == 2);
  CHECK(L.bottom() == 0);
  CHECK(L.top() == 1);
  CHECK(L.join(0, 1) == 1);
  CHECK(L.meet(0, 1) == 0);
  auto pf = prime_filters(L, PrimeFilterStrategy::Exhaustive);
  REQUIRE(pf.size() == 1);
  CHECK(pf[0].members == std::vector<int>{1});
  CHECK(prime_filters(L, PrimeFilterStrategy::JoinIrreducible) == pf);
}

TEST_CASE("order matrix validation") {
  using M = std::vector<std::vector<bool>>;
  // Not reflexive.
  CHECK_THROWS_AS(FinDistLattice::from_leq({"a"}, M{{false}}, std::nullopt),
                  InvalidLattice);
  // Not antisymmetric.
  CHECK_THROWS_AS(FinDistLattice::from_leq(
                      {"a", "b"}, M{{true, true}, {true, true}}, std::nullopt),
                  InvalidLattice);
  // Two maximal elements: no top, join undefined.
  CHECK_THROWS_AS(
      FinDistLattice::from_leq({"bot", "a", "b"},
                               M{{true, true, true},
                                 {false, true, false},
                                 {false, false, true}},
                               std::nullopt),
      InvalidLattice);
  // Diamond with three atoms: a lattice, but not distributive.
  CHECK_THROWS_AS(
      FinDistLattice::from_leq(
          {"bot", "a", "b", "c", "top"},
          M{{true, true, true, true, true},
            {false, true, false, false, true},
            {false, false, true, false, true},
            {false, false, false, true, true},
            {false, false, false, false, true}},
          std::nullopt),
      InvalidLattice);
  // Ragged matrix.
  CHECK_THROWS_AS(FinDistLattice::from_leq({"a", "b"}, M{{true, true}},
                                           std::nullopt),
                  InvalidLattice);
  // Labels must order by inclusion.
  CHECK_THROWS_AS(
      FinDistLattice::from_leq(
          {"bot", "top"}, M{{true, true}, {false, true}},
          std::vector<OpenSet>{OpenSet::full(kC), OpenSet::empty(kC)}),
      InvalidLattice);
}

TEST_CASE("open-set family constructor wants a closed family") {
  std::vector<OpenSet> good = {OpenSet::empty(kC), piece(0, 1), piece(1, 2),
                               piece(0, 2), OpenSet::full(kC)};
  FinDistLattice L = FinDistLattice::from_open_sets(good);
  CHECK(L.size() == 5);
  CHECK(L.labels().has_value());
  // Missing the union of the two atoms.
  CHECK_THROWS_AS(
      FinDistLattice::from_open_sets(
          {OpenSet::empty(kC), piece(0, 1), piece(1, 2), OpenSet::full(kC)}),
      InvalidLattice);
  // Missing the empty set.
  CHECK_THROWS_AS(
      FinDistLattice::from_open_sets({piece(0, 1), OpenSet::full(kC)}),
      InvalidLattice);
}

TEST_CASE("generated lattice from two atoms: the worked five elements") {
  FinDistLattice L = generate_lattice(kC, {piece(0, 1), piece(1, 2)});
  CHECK(L.size() == 5);
  REQUIRE(L.labels().has_value());
  CHECK(L.index_of(OpenSet::empty(kC)).has_value());
  CHECK(L.index_of(piece(0, 1)).has_value());
  CHECK(L.index_of(piece(1, 2)).has_value());
  CHECK(L.index_of(piece(0, 2)).has_value());
  CHECK(L.index_of(OpenSet::full(kC)).has_value());
  CHECK_FALSE(L.index_of(piece(2, 3)).has_value());

  auto pf = prime_filters(L, PrimeFilterStrategy::JoinIrreducible);
  CHECK(pf.size() == 3);
  CHECK(prime_filters(L, PrimeFilterStrategy::Exhaustive) == pf);
  for (const PrimeFilter& f : pf) CHECK(is_prime_filter(L, f));

  // The three filters are generated by the two atoms and the full carrier.
  int a = *L.index_of(piece(0, 1));
  int b = *L.index_of(piece(1, 2));
  int ab = *L.index_of(piece(0, 2));
  int top = *L.index_of(OpenSet::full(kC));
  std::vector<PrimeFilter> expect;
  auto up = [&](int e) {
    PrimeFilter f;
    for (int u = 0; u < L.size(); ++u)
      if (L.leq(e, u)) f.members.push_back(u);
    std::sort(f.members.begin(), f.members.end());
    return f;
  };
  expect = {up(a), up(b), up(top)};
  std::sort(expect.begin(), expect.end());
  CHECK(pf == expect);

  SpectralSpace sp = hull_kernel_space(L);
  CHECK(sp.points.size() == 3);
  CHECK(sp.opens.size() == 5);
  CHECK(sp.opens[L.bottom()].empty());
  CHECK(sp.opens[top].size() == 3);
  // The union atom is visible from exactly the two atom filters.
  CHECK(sp.opens[ab].size() == 2);

  RoundtripReport r = roundtrip_iso_check(L);
  CHECK(r.isomorphic);
  CHECK(r.points == 3);
  CHECK(r.opens == 5);
}

TEST_CASE("degenerate generator families") {
  FinDistLattice none = generate_lattice(kC, {});
  CHECK(none.size() == 2);
  FinDistLattice ful = generate_lattice(kC, {OpenSet::full(kC)});
  CHECK(ful.size() == 2);
  FinDistLattice dup = generate_lattice(kC, {piece(0, 1), piece(0, 1)});
  CHECK(dup.size() == 3);
  CHECK(roundtrip_iso_check(none).isomorphic);
  CHECK(roundtrip_iso_check(dup).isomorphic);
}

TEST_CASE("generation cap") {
  std::vector<OpenSet> gens = {piece(0, 1), piece(1, 2), piece(2, 3)};
  CHECK_THROWS_AS(generate_lattice(kC, gens, 4), EnumerationCapExceeded);
  CHECK_THROWS_AS(prime_filters(generate_lattice(kC, gens),
                                PrimeFilterStrategy::Exhaustive, 4),
                  EnumerationCapExceeded);
}

TEST_CASE("carrier mismatch across generators") {
  Carrier other(Rational(0), Rational(5));
  CHECK_THROWS_AS(generate_lattice(kC, {piece(0, 1),
                                        OpenSet::full(other)}),
                  CarrierMismatch);
}

TEST_CASE("join and meet agree with the order on generated lattices") {
  Sampler s(31);
  for (int round = 0; round < 40; ++round) {
    std::vector<OpenSet> gens = s.generators(kC, s.uniform_int(1, 3));
    FinDistLattice L = generate_lattice(kC, gens);
    for (int a = 0; a < L.size(); ++a)
      for (int b = 0; b < L.size(); ++b) {
        int j = L.join(a, b), m = L.meet(a, b);
        CHECK(L.leq(a, j));
        CHECK(L.leq(b, j));
        CHECK(L.leq(m, a));
        CHECK(L.leq(m, b));
        for (int u = 0; u < L.size(); ++u) {
          if (L.leq(a, u) && L.leq(b, u)) CHECK(L.leq(j, u));
          if (L.leq(u, a) && L.leq(u, b)) CHECK(L.leq(u, m));
        }
        // The labels realize join and meet as union and intersection.
        const auto& lab = *L.labels();
        CHECK(lab[j] == set_union(lab[a], lab[b]));
        CHECK(lab[m] == set_intersect(lab[a], lab[b]));
      }
  }
}

TEST_CASE("prime filter strategies agree and pass the validity predicate") {
  Sampler s(32);
  int done = 0;
  while (done < 60) {
    std::vector<OpenSet> gens = s.generators(kC, s.uniform_int(0, 3));
    FinDistLattice L = generate_lattice(kC, gens);
    if (static_cast<std::size_t>(L.size()) > 24) continue;  // oracle range
    auto fast = prime_filters(L, PrimeFilterStrategy::JoinIrreducible);
    auto slow = prime_filters(L, PrimeFilterStrategy::Exhaustive);
    CHECK(fast == slow);
    for (const PrimeFilter& f : fast) CHECK(is_prime_filter(L, f));
    // Point count equals the number of occupied Venn regions.
    CHECK(static_cast<int>(fast.size()) == venn_cell_count(kC, gens));
    ++done;
  }
}

TEST_CASE("round-trip isomorphism on random generated lattices") {
  Sampler s(33);
  for (int round = 0; round < 60; ++round) {
    std::vector<OpenSet> gens = s.generators(kC, s.uniform_int(0, 4));
    FinDistLattice L = generate_lattice(kC, gens);
    RoundtripReport r = roundtrip_iso_check(L);
    CHECK(r.isomorphic);
    CHECK(r.opens == L.size());
    CHECK(r.points == venn_cell_count(kC, gens));
  }
}

TEST_CASE("filters are upward closed and meet closed") {
  FinDistLattice L = generate_lattice(kC, {piece(0, 2), piece(1, 3)});
  for (const PrimeFilter& f : prime_filters(L)) {
    for (int a : f.members) {
      CHECK(f.contains(a));
      for (int b : f.members)
        CHECK(f.contains(L.meet(a, b)));
      for (int u = 0; u < L.size(); ++u)
        if (L.leq(a, u)) CHECK(f.contains(u));
    }
    CHECK_FALSE(f.contains(L.bottom()));
    CHECK(f.contains(L.top()));
  }
}
