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

#include "specdom/galois.hpp"

#include <vector>

#include "specdom/errors.hpp"

namespace specdom {

namespace {

std::vector<OpenSet> opens_of(const StepFn& f) {
  std::vector<OpenSet> out;
  out.reserve(f.components().size());
  for (const auto& c : f.components()) out.push_back(c.open);
  return out;
}

}  // namespace

StepFn restrict_to_points(const StepFn& g) {
  return make_stepfn(g.carrier(), g.dim(), g.components());
}

Box meet_over_open(const StepFn& f, const OpenSet& W) {
  if (W.carrier() != f.carrier())
    throw CarrierMismatch("open set and step function disagree on carrier");
  if (W.is_empty())
    throw EmptyOpen("meet over the empty set is undefined");
  std::vector<OpenSet> opens = opens_of(f);
  opens.push_back(W);
  std::vector<Box> values;
  for (const auto& cell : cells(f.carrier(), opens)) {
    Rational x = cell_representative(cell);
    // W is part of the refinement, so each cell is inside or disjoint.
    if (W.contains(x)) values.push_back(eval(f, x));
  }
  return box_meet(values);
}

OrderVerdict envelope_leq(const StepFn& g, const StepFn& f) {
  if (g.carrier() != f.carrier())
    throw CarrierMismatch("step functions live on different carriers");
  if (g.dim() != f.dim())
    throw DimensionMismatch("step functions have different value dimensions");
  const auto& comps = g.components();
  for (std::size_t j = 0; j < comps.size(); ++j) {
    if (comps[j].open.is_empty()) continue;  // contributes nothing
    if (!box_leq(comps[j].box, meet_over_open(f, comps[j].open)))
      return {false, "component #" + std::to_string(j)};
  }
  return {true, std::nullopt};
}

StepFn envelope(const StepFn& f) {
  std::vector<StepComponent> out;
  for (const auto& cell : cells(f.carrier(), opens_of(f))) {
    Rational x = cell_representative(cell);
    // The intersection of the opens active on this cell; the full carrier
    // when none is, in which case the meet below sweeps over a Bottom value
    // of f (this very cell) and lands on Bottom.
    OpenSet region = OpenSet::full(f.carrier());
    for (const auto& comp : f.components())
      if (comp.open.contains(x)) region = set_intersect(region, comp.open);
    Box m = meet_over_open(f, region);
    if (!m.is_bottom()) out.push_back({region, m});
  }
  return make_stepfn(f.carrier(), f.dim(), std::move(out));
}

AdjunctionVerdict adjunction_check(const StepFn& g, const StepFn& f) {
  OrderVerdict lhs = order_cells(restrict_to_points(g), f);
  OrderVerdict rhs = envelope_leq(g, f);
  AdjunctionVerdict v;
  v.restrict_below = lhs.holds;
  v.envelope_above = rhs.holds;
  v.agree = lhs.holds == rhs.holds;
  v.left_witness = lhs.witness;
  v.right_witness = rhs.witness;
  return v;
}

GaloisRoundtrip galois_roundtrip_check(const StepFn& f) {
  StepFn back = restrict_to_points(envelope(f));
  OrderVerdict up = order_cells(f, back);
  if (!up.holds) return {false, up.witness};
  OrderVerdict down = order_cells(back, f);
  if (!down.holds) return {false, down.witness};
  return {true, std::nullopt};
}

}  // namespace specdom
