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
#include <optional>
#include <string>
#include <vector>

#include "specdom/box.hpp"
#include "specdom/open_set.hpp"

namespace specdom {

// One plateau: the box value contributed on the open set.
struct StepComponent {
  OpenSet open;
  Box box;
};

// A finite join of plateaus b*chi_W over a carrier: at a point, the value is
// the join of every box whose open set contains the point (Bottom when none
// does).  Construction verifies consistency — on every cell of the joint
// refinement the active boxes must actually intersect — so evaluation never
// fails later.  The same data also reads as a step function over the
// spectral completion of the carrier (each open set standing for its
// hull-kernel open), which is why the order below can be computed through
// prime filters as well as through cells.
class StepFn {
 public:
  const Carrier& carrier() const { return carrier_; }
  int dim() const { return dim_; }
  const std::vector<StepComponent>& components() const { return comps_; }

  friend bool operator==(const StepFn& a, const StepFn& b);
  friend bool operator!=(const StepFn& a, const StepFn& b) { return !(a == b); }

  friend StepFn make_stepfn(Carrier carrier, int dim,
                            std::vector<StepComponent> comps);

 private:
  StepFn(Carrier carrier, int dim, std::vector<StepComponent> comps)
      : carrier_(std::move(carrier)), dim_(dim), comps_(std::move(comps)) {}
  Carrier carrier_;
  int dim_;
  std::vector<StepComponent> comps_;
};

// Validates carrier and dimension agreement and cellwise consistency.
// Throws InconsistentJoin naming a violating cell, CarrierMismatch,
// DimensionMismatch, InvalidArgument (dim < 1).
StepFn make_stepfn(Carrier carrier, int dim, std::vector<StepComponent> comps);

// Pointwise value: join of the active boxes.
Box eval(const StepFn& f, const Rational& x);

// Verdict of an order or way-below test; `witness` names the violating cell
// / prime filter / component when the verdict is negative.
struct OrderVerdict {
  bool holds = false;
  std::optional<std::string> witness;
  explicit operator bool() const { return holds; }
};

// f <= g pointwise, decided on representatives of the joint cells.
OrderVerdict order_cells(const StepFn& f, const StepFn& g);

// f <= g decided on the spectral side: for every prime filter F of the
// lattice generated by both functions' open sets, the join of f's boxes
// with open set in F is below the join of g's.  Agrees with order_cells;
// the agreement is exercised by tests rather than assumed here.
OrderVerdict order_primefilters(const StepFn& f, const StepFn& g,
                                std::size_t lattice_cap = 4096);

enum class PreimageStrategy {
  // Evaluate the defining formula: union over consistent component subsets
  // S of the common refinement of their open sets, kept when b is way below
  // the joined value.  Exponential in the component count, hence capped.
  Formula,
  // Union of the joint cells on which b is way below g's value.
  Cells,
};

// The largest open set on which g's value is way above b, i.e. the preimage
// of the b-way-above cone.  Both strategies compute the same set.
OpenSet preimage_way_above(const StepFn& g, const Box& b,
                           PreimageStrategy strategy,
                           std::size_t subset_cap = 20);

enum class WayBelowStrategy {
  Spectral,  // preimages via the Formula route
  AbsBasis,  // preimages via the Cells route
};

// f way below g: every component (W, b) of f must have W inside the open
// set where g's value is way above b.  The two strategies differ only in
// how that open set is computed and must agree.
OrderVerdict way_below(const StepFn& f, const StepFn& g,
                       WayBelowStrategy strategy,
                       std::size_t subset_cap = 20);

// Given finitely many step functions all way below g, builds one step
// function y with every member of A way below y and y way below g (the
// interpolation witness that makes the basis an abstract basis).  Midpoint
// boxes between each component value and g's value on each joint cell.
// Throws NotWayBelow (with the offending index) when the precondition
// fails.
StepFn interpolate(const std::vector<StepFn>& A, const StepFn& g);

}  // namespace specdom
