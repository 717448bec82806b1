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

#include "specdom/sampling.hpp"

#include <algorithm>

#include "specdom/errors.hpp"

namespace specdom {

int Sampler::uniform_int(int lo, int hi) {
  if (hi < lo) throw InvalidArgument("empty sampling range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng_() % span);
}

Rational Sampler::rational(int max_num, int max_den) {
  int num = uniform_int(-max_num, max_num);
  int den = uniform_int(1, max_den);
  return Rational(num, den);
}

Rational Sampler::rational_in(const Rational& lo, const Rational& hi,
                              int grid) {
  int i = uniform_int(0, grid);
  return lo + (hi - lo) * Rational(i, grid);
}

Box Sampler::box(int dim, int max_num, int max_den) {
  std::vector<Box::Interval> dims;
  dims.reserve(dim);
  for (int d = 0; d < dim; ++d) {
    Rational a = rational(max_num, max_den);
    Rational b = rational(max_num, max_den);
    dims.push_back({rat_min(a, b), rat_max(a, b)});
  }
  return Box::make(std::move(dims));
}

OpenSet Sampler::open_set(const Carrier& carrier, int max_pieces, int grid) {
  int n = uniform_int(0, max_pieces);
  std::vector<HalfOpenPiece> raw;
  for (int i = 0; i < n; ++i) {
    if (uniform_int(0, 3) == 0) {
      raw.push_back(HalfOpenPiece::from_left_end(
          rational_in(carrier.lo, carrier.hi, grid)));
    } else {
      Rational a = rational_in(carrier.lo, carrier.hi, grid);
      Rational b = rational_in(carrier.lo, carrier.hi, grid);
      if (a == b) continue;  // would be empty
      raw.push_back(HalfOpenPiece::open(rat_min(a, b), rat_max(a, b)));
    }
  }
  return OpenSet(carrier, std::move(raw));
}

StepFn Sampler::stepfn(const Carrier& carrier, int dim, int max_components,
                       int grid) {
  int n = uniform_int(0, max_components);
  std::vector<StepComponent> comps;
  if (coin()) {
    // Anchored style: every box contains the anchor point, so any subset of
    // boxes has a common refinement and consistency holds on every cell.
    std::vector<Rational> anchor;
    for (int d = 0; d < dim; ++d) anchor.push_back(rational(4, 4));
    for (int i = 0; i < n; ++i) {
      std::vector<Box::Interval> dims;
      for (int d = 0; d < dim; ++d) {
        Rational down = Rational(uniform_int(0, 8), uniform_int(1, 4));
        Rational up = Rational(uniform_int(0, 8), uniform_int(1, 4));
        dims.push_back({anchor[d] - down, anchor[d] + up});
      }
      Box b = coin() && uniform_int(0, 7) == 0 ? Box::bottom()
                                               : Box::make(std::move(dims));
      comps.push_back({open_set(carrier, 2, grid), b});
    }
  } else {
    // Partition style: disjoint opens, so no two boxes are ever active
    // together and they can be anything.
    std::vector<OpenSet> runs =
        cells(carrier, {open_set(carrier, max_components, grid)});
    for (const auto& run : runs) {
      if (static_cast<int>(comps.size()) >= n) break;
      if (coin()) continue;
      comps.push_back({run, coin() ? box(dim) : Box::bottom()});
    }
  }
  return make_stepfn(carrier, dim, std::move(comps));
}

StepFn Sampler::way_below_of(const StepFn& g) {
  std::vector<OpenSet> opens;
  for (const auto& c : g.components()) opens.push_back(c.open);
  std::vector<StepComponent> comps;
  for (const auto& cell : cells(g.carrier(), opens)) {
    if (coin()) continue;
    Box v = eval(g, cell_representative(cell));
    if (v.is_bottom()) {
      // Way below Bottom means being Bottom; emit it or nothing.
      if (coin()) comps.push_back({cell, Box::bottom()});
      continue;
    }
    comps.push_back({cell, box_inflate(v, Rational(1))});
  }
  return make_stepfn(g.carrier(), g.dim(), std::move(comps));
}

std::pair<StepFn, StepFn> Sampler::way_below_pair(const Carrier& carrier,
                                                  int dim, int max_components,
                                                  int grid) {
  StepFn g = stepfn(carrier, dim, max_components, grid);
  StepFn f = way_below_of(g);
  return {std::move(f), std::move(g)};
}

std::vector<OpenSet> Sampler::generators(const Carrier& carrier, int count,
                                         int max_pieces, int grid) {
  std::vector<OpenSet> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i)
    out.push_back(open_set(carrier, max_pieces, grid));
  return out;
}

}  // namespace specdom
