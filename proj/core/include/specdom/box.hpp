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
#include <utility>
#include <vector>

#include "specdom/rational.hpp"

namespace specdom {

// A compact rational box [lo_1,hi_1] x ... x [lo_n,hi_n], or Bottom.
//
// Boxes are ordered by reverse inclusion: x <= y iff y's box is contained in
// x's.  Bottom stands for the whole space and is the least element; it
// carries no dimension of its own and is compatible with every arity.
// Joins are intersections (partial: they fail when the boxes are disjoint in
// some coordinate) and meets are enclosing hulls (total, Bottom-absorbing).
class Box {
 public:
  using Interval = std::pair<Rational, Rational>;

  static Box bottom() { return Box(); }
  // Validates n >= 1 and lo <= hi per coordinate.
  static Box make(std::vector<Interval> dims);
  // Convenience for one-dimensional boxes.
  static Box interval(Rational lo, Rational hi);
  // Degenerate box {p}.
  static Box point(const std::vector<Rational>& p);

  bool is_bottom() const { return !dims_.has_value(); }
  int dim() const { return dims_ ? static_cast<int>(dims_->size()) : 0; }
  const std::vector<Interval>& dims() const;
  const Rational& low(int d) const { return dims().at(d).first; }
  const Rational& high(int d) const { return dims().at(d).second; }

  // Rendering like "[0,2]x[1,5]" or "bottom"; used in messages and witnesses.
  std::string str() const;

  friend bool operator==(const Box& a, const Box& b) { return a.dims_ == b.dims_; }
  friend bool operator!=(const Box& a, const Box& b) { return !(a == b); }

 private:
  Box() = default;
  std::optional<std::vector<Interval>> dims_;
};

// x <= y in the reverse-inclusion order.  DimensionMismatch when both are
// non-bottom with different arities.
bool box_leq(const Box& x, const Box& y);

// x is way below y: Bottom is way below everything; otherwise y must be
// non-bottom and strictly inside x coordinate-wise.
bool box_way_below(const Box& x, const Box& y);

// Least upper bound (intersection).  Bottom members are identities and the
// empty join is Bottom.  Throws InconsistentJoin when the intersection is
// empty in some coordinate, DimensionMismatch on ragged arities.
Box box_join(const std::vector<Box>& xs);
// As box_join but reports an inconsistent family as nullopt.
std::optional<Box> try_box_join(const std::vector<Box>& xs);

// Greatest lower bound (enclosing hull); Bottom absorbs.  Throws EmptyMeet
// on an empty family.
Box box_meet(const std::vector<Box>& xs);

// Largest coordinate width; nullopt encodes the infinite width of Bottom.
std::optional<Rational> box_width(const Box& x);

// Coordinate-wise midpoints between the endpoints of a and b; with a bottom
// and b not, falls back to inflating b by one unit per side (so the result
// still sits strictly between them in the way-below sense).
Box box_midpoint(const Box& a, const Box& b);

// Widens every side of x by `amount` (> 0); Bottom stays Bottom.
Box box_inflate(const Box& x, const Rational& amount);

}  // namespace specdom
