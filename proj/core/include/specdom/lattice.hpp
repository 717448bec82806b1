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

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "specdom/open_set.hpp"

namespace specdom {

// A finite bounded distributive lattice over indexed elements.
//
// Two ways in:
//  * from_leq — an abstract order matrix (e.g. read from a file).  Fully
//    validated: partial order, unique glb/lub for every pair, bounds,
//    distributivity, and — when labels are given — that the order agrees
//    with set inclusion of the labels.  The O(n^3) checks cap the size.
//  * from_open_sets — a family of canonical OpenSets over one carrier that
//    is already closed under union/intersection and contains {} and the full
//    carrier.  Set families are distributive lattices by construction, so
//    only the closure property is (cheaply) verified.
class FinDistLattice {
 public:
  // Hard size limit for the O(n^3) validation path.
  static constexpr std::size_t kValidationCap = 256;

  static FinDistLattice from_leq(std::vector<std::string> names,
                                 std::vector<std::vector<bool>> leq,
                                 std::optional<std::vector<OpenSet>> labels);
  static FinDistLattice from_open_sets(std::vector<OpenSet> elements);

  int size() const { return static_cast<int>(names_.size()); }
  bool leq(int a, int b) const { return leq_[a][b]; }
  int meet(int a, int b) const;
  int join(int a, int b) const;
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  const std::vector<std::string>& names() const { return names_; }
  const std::optional<std::vector<OpenSet>>& labels() const { return labels_; }
  // Index of a canonical OpenSet among the labels, if it is one.
  std::optional<int> index_of(const OpenSet& s) const;

 private:
  FinDistLattice() = default;
  void build_tables();

  std::vector<std::string> names_;
  std::optional<std::vector<OpenSet>> labels_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::vector<int>> meet_, join_;  // empty => compute via labels
  std::map<OpenSet, int> index_;
  int bottom_ = -1, top_ = -1;
};

// An upward-closed, meet-closed, proper subset whose complement is closed
// under joins; `members` are sorted element indices.
struct PrimeFilter {
  std::vector<int> members;
  bool contains(int e) const;
  friend bool operator==(const PrimeFilter& a, const PrimeFilter& b) {
    return a.members == b.members;
  }
  friend bool operator<(const PrimeFilter& a, const PrimeFilter& b) {
    return a.members < b.members;
  }
};

// Closure of `generators` (plus {} and the full carrier) under union and
// intersection; throws EnumerationCapExceeded when the closure would pass
// `cap` elements.  Element order is the canonical OpenSet order, so the
// result is deterministic regardless of generator order.
FinDistLattice generate_lattice(const Carrier& carrier,
                                const std::vector<OpenSet>& generators,
                                std::size_t cap = 4096);

enum class PrimeFilterStrategy {
  // Principal filters of join-irreducible elements; complete for finite
  // distributive lattices and fast enough for generated sublattices.
  JoinIrreducible,
  // Enumerates every upward-closed subset and keeps the ones that pass
  // is_prime_filter; the correctness-first oracle.  Requires
  // size() <= exhaustive_cap.
  Exhaustive,
};

// All prime filters, sorted by member set.  `exhaustive_cap` bounds the
// element count admitted to the exhaustive strategy.
std::vector<PrimeFilter> prime_filters(
    const FinDistLattice& L,
    PrimeFilterStrategy strategy = PrimeFilterStrategy::JoinIrreducible,
    std::size_t exhaustive_cap = 24);

// The independent brute-force validity predicate: filter axioms plus
// primality, checked directly against the order.
bool is_prime_filter(const FinDistLattice& L, const PrimeFilter& f);

// The space of prime filters with one open per lattice element:
// opens[u] = sorted indices of the points (prime filters) containing u.
struct SpectralSpace {
  std::vector<PrimeFilter> points;
  std::vector<std::vector<int>> opens;
};
SpectralSpace hull_kernel_space(
    const FinDistLattice& L,
    PrimeFilterStrategy strategy = PrimeFilterStrategy::JoinIrreducible);

// Does u |-> opens[u] reproduce the lattice exactly?  True iff the map is
// injective, order-preserving and order-reflecting, and sends joins/meets to
// unions/intersections of point sets.
struct RoundtripReport {
  bool isomorphic = false;
  int points = 0;
  int opens = 0;
};
RoundtripReport roundtrip_iso_check(
    const FinDistLattice& L,
    PrimeFilterStrategy strategy = PrimeFilterStrategy::JoinIrreducible);

}  // namespace specdom
