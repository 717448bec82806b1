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

#include "specdom/box.hpp"

#include "specdom/errors.hpp"

namespace specdom {

Box Box::make(std::vector<Interval> dims) {
  if (dims.empty()) throw InvalidArgument("box needs at least one dimension");
  for (const auto& [lo, hi] : dims) {
    if (hi < lo) throw InvalidArgument("box endpoint out of order");
  }
  Box b;
  b.dims_ = std::move(dims);
  return b;
}

Box Box::interval(Rational lo, Rational hi) {
  return make({{std::move(lo), std::move(hi)}});
}

Box Box::point(const std::vector<Rational>& p) {
  std::vector<Interval> dims;
  dims.reserve(p.size());
  for (const Rational& x : p) dims.emplace_back(x, x);
  return make(std::move(dims));
}

const std::vector<Box::Interval>& Box::dims() const {
  if (!dims_) throw InvalidArgument("bottom box has no coordinates");
  return *dims_;
}

std::string Box::str() const {
  if (is_bottom()) return "bottom";
  std::string out;
  for (const auto& [lo, hi] : *dims_) {
    if (!out.empty()) out += "x";
    out += "[" + lo.str() + "," + hi.str() + "]";
  }
  return out;
}

namespace {

void check_same_dim(const Box& x, const Box& y) {
  if (!x.is_bottom() && !y.is_bottom() && x.dim() != y.dim())
    throw DimensionMismatch("boxes of dimension " + std::to_string(x.dim()) +
                            " and " + std::to_string(y.dim()));
}

}  // namespace

bool box_leq(const Box& x, const Box& y) {
  if (x.is_bottom()) return true;
  if (y.is_bottom()) return false;
  check_same_dim(x, y);
  for (int d = 0; d < x.dim(); ++d) {
    if (y.low(d) < x.low(d) || x.high(d) < y.high(d)) return false;
  }
  return true;
}

bool box_way_below(const Box& x, const Box& y) {
  if (x.is_bottom()) return true;
  if (y.is_bottom()) return false;
  check_same_dim(x, y);
  for (int d = 0; d < x.dim(); ++d) {
    if (!(x.low(d) < y.low(d)) || !(y.high(d) < x.high(d))) return false;
  }
  return true;
}

std::optional<Box> try_box_join(const std::vector<Box>& xs) {
  std::optional<std::vector<Box::Interval>> acc;
  for (const Box& x : xs) {
    if (x.is_bottom()) continue;
    if (!acc) {
      acc = x.dims();
      continue;
    }
    if (static_cast<int>(acc->size()) != x.dim())
      throw DimensionMismatch("join over boxes of mixed dimension");
    for (int d = 0; d < x.dim(); ++d) {
      auto& [lo, hi] = (*acc)[d];
      if (lo < x.low(d)) lo = x.low(d);
      if (x.high(d) < hi) hi = x.high(d);
      if (hi < lo) return std::nullopt;
    }
  }
  if (!acc) return Box::bottom();
  return Box::make(std::move(*acc));
}

Box box_join(const std::vector<Box>& xs) {
  auto j = try_box_join(xs);
  if (!j) throw InconsistentJoin("boxes have empty intersection; no upper bound");
  return *j;
}

Box box_meet(const std::vector<Box>& xs) {
  if (xs.empty()) throw EmptyMeet("meet of an empty family of boxes");
  std::optional<std::vector<Box::Interval>> acc;
  for (const Box& x : xs) {
    if (x.is_bottom()) return Box::bottom();
    if (!acc) {
      acc = x.dims();
      continue;
    }
    if (static_cast<int>(acc->size()) != x.dim())
      throw DimensionMismatch("meet over boxes of mixed dimension");
    for (int d = 0; d < x.dim(); ++d) {
      auto& [lo, hi] = (*acc)[d];
      if (x.low(d) < lo) lo = x.low(d);
      if (hi < x.high(d)) hi = x.high(d);
    }
  }
  return Box::make(std::move(*acc));
}

std::optional<Rational> box_width(const Box& x) {
  if (x.is_bottom()) return std::nullopt;
  Rational w(0);
  for (int d = 0; d < x.dim(); ++d) w = rat_max(w, x.high(d) - x.low(d));
  return w;
}

Box box_midpoint(const Box& a, const Box& b) {
  if (b.is_bottom()) return Box::bottom();
  if (a.is_bottom()) return box_inflate(b, Rational(1));
  check_same_dim(a, b);
  std::vector<Box::Interval> dims;
  dims.reserve(a.dim());
  for (int d = 0; d < a.dim(); ++d) {
    dims.emplace_back(rat_mid(a.low(d), b.low(d)), rat_mid(a.high(d), b.high(d)));
  }
  return Box::make(std::move(dims));
}

Box box_inflate(const Box& x, const Rational& amount) {
  if (x.is_bottom()) return x;
  std::vector<Box::Interval> dims;
  dims.reserve(x.dim());
  for (int d = 0; d < x.dim(); ++d) {
    dims.emplace_back(x.low(d) - amount, x.high(d) + amount);
  }
  return Box::make(std::move(dims));
}

}  // namespace specdom
