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

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "specdom/box.hpp"
#include "specdom/open_set.hpp"
#include "specdom/step_function.hpp"

namespace specdom {

// Seeded random values for the law suites.  Draws go through the 64-bit
// Mersenne twister with plain modulo reduction, so a seed produces the same
// stream on every platform and standard library (std::uniform_int_distribution
// is implementation-defined; this is not).
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t raw() { return rng_(); }
  // Uniform-enough integer in [lo, hi], both inclusive; modulo bias is
  // irrelevant at the tiny ranges used here.
  int uniform_int(int lo, int hi);
  bool coin() { return uniform_int(0, 1) == 1; }

  // p/q with |p| <= max_num and 1 <= q <= max_den.
  Rational rational(int max_num = 8, int max_den = 8);
  // A grid point lo + i*(hi - lo)/grid, i in [0, grid].
  Rational rational_in(const Rational& lo, const Rational& hi, int grid = 16);

  // A box with sorted random endpoints per coordinate.
  Box box(int dim, int max_num = 8, int max_den = 4);

  // At most max_pieces half-open pieces with endpoints on the carrier grid;
  // may come out empty or full after canonicalization.
  OpenSet open_set(const Carrier& carrier, int max_pieces = 3, int grid = 12);

  // Consistent by construction, two styles mixed by a coin flip: either all
  // boxes share a random anchor point (overlapping opens are then fine), or
  // the opens are disjoint runs of a random partition (boxes then
  // unconstrained).
  StepFn stepfn(const Carrier& carrier, int dim, int max_components = 4,
                int grid = 12);

  // A function way below g: a random selection of g's joint cells with the
  // cell value inflated by one unit (putting the value strictly inside the
  // new box, which is what way-below needs cellwise).
  StepFn way_below_of(const StepFn& g);

  // A pair f way-below g with g freshly sampled.
  std::pair<StepFn, StepFn> way_below_pair(const Carrier& carrier, int dim,
                                           int max_components = 3,
                                           int grid = 8);

  // Generator families for lattice laws.
  std::vector<OpenSet> generators(const Carrier& carrier, int count,
                                  int max_pieces = 2, int grid = 8);

 private:
  std::mt19937_64 rng_;
};

}  // namespace specdom
