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

#include "specdom/step_function.hpp"

namespace specdom {

// The function spaces over the carrier and over its spectral completion are
// linked by an adjoint pair: restriction (read a spectral-side step function
// as a plain one) is left adjoint to the lower envelope (the largest
// spectral-side function restricting below a given one).  Step functions
// represent both sides with the same data, which keeps the pair computable.

// Left adjoint.  Representationally the identity; re-runs validation so the
// result is a well-formed function of the concrete side.
StepFn restrict_to_points(const StepFn& g);

// Greatest lower bound (enclosing hull) of f's values over the nonempty
// open set W: the meet of f's value on every joint cell inside W.
// Throws EmptyOpen when W is empty, CarrierMismatch when carriers differ.
Box meet_over_open(const StepFn& f, const OpenSet& W);

// Decides g <= envelope(f) without materializing the envelope: every
// component (W, b) of g with W nonempty must satisfy b <= meet of f over W.
OrderVerdict envelope_leq(const StepFn& g, const StepFn& f);

// Right adjoint, materialized: one component per joint cell of f's open
// sets, carrying the meet of f over the intersection of the component opens
// active on that cell.  Components whose meet is Bottom are dropped (they
// would not change any value).
StepFn envelope(const StepFn& f);

// The two sides of the adjunction inequality, evaluated independently:
// restrict_to_points(g) <= f via the cell order, and g <= envelope(f) via
// envelope_leq.  `agree` is the adjunction law for this pair.
struct AdjunctionVerdict {
  bool restrict_below = false;
  bool envelope_above = false;
  bool agree = false;
  std::optional<std::string> left_witness;   // from the cell order
  std::optional<std::string> right_witness;  // violating component of g
};
AdjunctionVerdict adjunction_check(const StepFn& g, const StepFn& f);

// Restricting the materialized envelope must give back f (up to pointwise
// order in both directions).  `witness` names a cell where they differ.
struct GaloisRoundtrip {
  bool equal = false;
  std::optional<std::string> witness;
};
GaloisRoundtrip galois_roundtrip_check(const StepFn& f);

}  // namespace specdom
