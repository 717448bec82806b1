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

#include <optional>
#include <string>
#include <vector>

#include "specdom/rational.hpp"

namespace specdom {

// The ambient interval [lo, hi] every open set here lives in.
struct Carrier {
  Carrier(Rational lo, Rational hi);
  Rational lo, hi;
  std::string str() const { return "[" + lo.str() + "," + hi.str() + "]"; }
  friend bool operator==(const Carrier& a, const Carrier& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
  friend bool operator!=(const Carrier& a, const Carrier& b) { return !(a == b); }
};

// One maximal run of points: either (lower, upper] with a rational lower
// bound, or — when `lower` is absent — everything from the carrier's left
// endpoint up to `upper`, left end included.  The latter kind is how the
// subspace trace of an interval reaching past the carrier is written; with
// upper == carrier.lo it degenerates to the singleton {lo}.
struct HalfOpenPiece {
  std::optional<Rational> lower;  // nullopt: closed at the carrier's left end
  Rational upper;

  static HalfOpenPiece from_left_end(Rational upper) {
    return HalfOpenPiece{std::nullopt, std::move(upper)};
  }
  static HalfOpenPiece open(Rational lower, Rational upper) {
    return HalfOpenPiece{std::move(lower), std::move(upper)};
  }

  friend bool operator==(const HalfOpenPiece& a, const HalfOpenPiece& b) {
    return a.lower == b.lower && a.upper == b.upper;
  }
  friend bool operator!=(const HalfOpenPiece& a, const HalfOpenPiece& b) {
    return !(a == b);
  }
};

// A finite union of half-open pieces inside a carrier, kept canonical:
// pieces clipped to the carrier, sorted, pairwise disjoint, and with a real
// gap between consecutive pieces (touching pieces are merged, so equality of
// point sets is equality of representations).
class OpenSet {
 public:
  // Canonicalizes `raw`: clips to the carrier, rejects pieces that are empty
  // after clipping (MalformedInterval), sorts and merges.
  OpenSet(Carrier carrier, std::vector<HalfOpenPiece> raw);

  static OpenSet empty(const Carrier& c) { return OpenSet(c, {}); }
  static OpenSet full(const Carrier& c) {
    return OpenSet(c, {HalfOpenPiece::from_left_end(c.hi)});
  }

  const Carrier& carrier() const { return carrier_; }
  const std::vector<HalfOpenPiece>& pieces() const { return pieces_; }
  bool is_empty() const { return pieces_.empty(); }
  bool is_full() const;

  // Membership; throws PointOutsideCarrier when x is not in [lo, hi].
  bool contains(const Rational& x) const;

  // Rendering like "{0}", "[0,1]u(3/2,2]", or "{}"; for messages.
  std::string str() const;

  friend bool operator==(const OpenSet& a, const OpenSet& b) {
    return a.carrier_ == b.carrier_ && a.pieces_ == b.pieces_;
  }
  friend bool operator!=(const OpenSet& a, const OpenSet& b) { return !(a == b); }
  // Total order on canonical forms (same carrier), for ordered containers.
  friend bool operator<(const OpenSet& a, const OpenSet& b);

 private:
  Carrier carrier_;
  std::vector<HalfOpenPiece> pieces_;
};

// Union / intersection / inclusion of sets over one carrier; all raise
// CarrierMismatch when the carriers differ.
OpenSet set_union(const OpenSet& a, const OpenSet& b);
OpenSet set_intersect(const OpenSet& a, const OpenSet& b);
bool is_subset(const OpenSet& a, const OpenSet& b);

// The joint refinement of the inputs: the singleton at the carrier's left
// end followed by the runs between consecutive breakpoints.  Every input is
// constant (all-in or all-out) on every cell, and the cells partition the
// carrier.  With no inputs this is {lo} and (lo, hi].
std::vector<OpenSet> cells(const Carrier& carrier,
                           const std::vector<OpenSet>& opens);

// A point of a single-piece open set (cells are such): the left endpoint for
// a from-the-left-end piece, the upper endpoint otherwise.
Rational cell_representative(const OpenSet& cell);

}  // namespace specdom
