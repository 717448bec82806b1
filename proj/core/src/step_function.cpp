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

#include "specdom/step_function.hpp"

#include <algorithm>
#include <utility>

#include "specdom/errors.hpp"
#include "specdom/lattice.hpp"

namespace specdom {

namespace {

std::vector<OpenSet> opens_of(const StepFn& f) {
  std::vector<OpenSet> out;
  out.reserve(f.components().size());
  for (const auto& c : f.components()) out.push_back(c.open);
  return out;
}

// Joint cells of every open set mentioned by the given functions, together
// with a representative point per cell.  Every open set is constant on each
// cell, so evaluating any of the functions at the representative gives the
// function's value on the whole cell.
struct CellTable {
  std::vector<OpenSet> cells;
  std::vector<Rational> reps;
};

CellTable joint_cells(const Carrier& carrier,
                      const std::vector<const StepFn*>& fns,
                      const std::vector<OpenSet>& extra = {}) {
  std::vector<OpenSet> opens = extra;
  for (const StepFn* f : fns) {
    auto fo = opens_of(*f);
    opens.insert(opens.end(), fo.begin(), fo.end());
  }
  CellTable t;
  t.cells = cells(carrier, opens);
  t.reps.reserve(t.cells.size());
  for (const auto& c : t.cells) t.reps.push_back(cell_representative(c));
  return t;
}

void check_compatible(const StepFn& f, const StepFn& g) {
  if (f.carrier() != g.carrier())
    throw CarrierMismatch("step functions live on different carriers");
  if (f.dim() != g.dim())
    throw DimensionMismatch("step functions have different value dimensions");
}

}  // namespace

bool operator==(const StepFn& a, const StepFn& b) {
  if (a.carrier_ != b.carrier_) return false;
  if (a.dim_ != b.dim_ || a.comps_.size() != b.comps_.size()) return false;
  for (std::size_t i = 0; i < a.comps_.size(); ++i) {
    if (a.comps_[i].open != b.comps_[i].open) return false;
    if (a.comps_[i].box != b.comps_[i].box) return false;
  }
  return true;
}

StepFn make_stepfn(Carrier carrier, int dim,
                   std::vector<StepComponent> comps) {
  if (dim < 1) throw InvalidArgument("step function dimension must be >= 1");
  for (const auto& c : comps) {
    if (c.open.carrier() != carrier)
      throw CarrierMismatch("component open set has a different carrier");
    if (!c.box.is_bottom() && c.box.dim() != dim)
      throw DimensionMismatch("component box has the wrong dimension");
  }
  // Consistency: on every cell of the joint refinement, the boxes active
  // there must have a common refinement.
  std::vector<OpenSet> opens;
  opens.reserve(comps.size());
  for (const auto& c : comps) opens.push_back(c.open);
  for (const auto& cell : cells(carrier, opens)) {
    Rational x = cell_representative(cell);
    std::vector<Box> active;
    for (const auto& c : comps)
      if (c.open.contains(x)) active.push_back(c.box);
    if (!try_box_join(active))
      throw InconsistentJoin("component boxes conflict on " + cell.str(),
                             cell.str());
  }
  return StepFn(std::move(carrier), dim, std::move(comps));
}

Box eval(const StepFn& f, const Rational& x) {
  std::vector<Box> active;
  for (const auto& c : f.components())
    if (c.open.contains(x)) active.push_back(c.box);
  // Construction guaranteed the join exists.
  return box_join(active);
}

OrderVerdict order_cells(const StepFn& f, const StepFn& g) {
  check_compatible(f, g);
  CellTable t = joint_cells(f.carrier(), {&f, &g});
  for (std::size_t i = 0; i < t.cells.size(); ++i) {
    if (!box_leq(eval(f, t.reps[i]), eval(g, t.reps[i])))
      return {false, "cell " + t.cells[i].str()};
  }
  return {true, std::nullopt};
}

OrderVerdict order_primefilters(const StepFn& f, const StepFn& g,
                                std::size_t lattice_cap) {
  check_compatible(f, g);
  std::vector<OpenSet> gens = opens_of(f);
  auto go = opens_of(g);
  gens.insert(gens.end(), go.begin(), go.end());
  FinDistLattice L =
      generate_lattice(f.carrier(), gens, lattice_cap);
  auto filters = prime_filters(L, PrimeFilterStrategy::JoinIrreducible);
  // A component participates in a filter's join when its open set, as a
  // lattice element, belongs to the filter.  Every component open is a
  // generator, so the lookups cannot miss.
  std::vector<int> f_idx, g_idx;
  for (const auto& c : f.components()) f_idx.push_back(*L.index_of(c.open));
  for (const auto& c : g.components()) g_idx.push_back(*L.index_of(c.open));
  for (std::size_t k = 0; k < filters.size(); ++k) {
    std::vector<Box> fa, ga;
    for (std::size_t i = 0; i < f_idx.size(); ++i)
      if (filters[k].contains(f_idx[i])) fa.push_back(f.components()[i].box);
    for (std::size_t i = 0; i < g_idx.size(); ++i)
      if (filters[k].contains(g_idx[i])) ga.push_back(g.components()[i].box);
    // Both joins exist: a prime filter's members share a point of the
    // carrier (the trace of a cell), where consistency applies.
    if (!box_leq(box_join(fa), box_join(ga)))
      return {false, "prime filter #" + std::to_string(k)};
  }
  return {true, std::nullopt};
}

OpenSet preimage_way_above(const StepFn& g, const Box& b,
                           PreimageStrategy strategy,
                           std::size_t subset_cap) {
  if (!b.is_bottom() && b.dim() != g.dim())
    throw DimensionMismatch("query box has the wrong dimension");
  const auto& comps = g.components();
  OpenSet acc = OpenSet::empty(g.carrier());
  switch (strategy) {
    case PreimageStrategy::Formula: {
      if (comps.size() > subset_cap)
        throw EnumerationCapExceeded(
            "too many components for subset enumeration (" +
            std::to_string(comps.size()) + " > " +
            std::to_string(subset_cap) + ")");
      const std::size_t m = comps.size();
      for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        std::vector<Box> boxes;
        for (std::size_t j = 0; j < m; ++j)
          if (mask & (std::size_t{1} << j)) boxes.push_back(comps[j].box);
        auto joined = try_box_join(boxes);
        // Subsets with no common refinement have empty intersection of
        // opens anyway (consistency), so skipping them loses nothing.
        if (!joined) continue;
        if (!box_way_below(b, *joined)) continue;
        OpenSet inter = OpenSet::full(g.carrier());
        for (std::size_t j = 0; j < m && !inter.is_empty(); ++j)
          if (mask & (std::size_t{1} << j))
            inter = set_intersect(inter, comps[j].open);
        acc = set_union(acc, inter);
      }
      return acc;
    }
    case PreimageStrategy::Cells: {
      CellTable t = joint_cells(g.carrier(), {&g});
      for (std::size_t i = 0; i < t.cells.size(); ++i) {
        if (box_way_below(b, eval(g, t.reps[i])))
          acc = set_union(acc, t.cells[i]);
      }
      return acc;
    }
  }
  throw InvalidArgument("unknown preimage strategy");
}

OrderVerdict way_below(const StepFn& f, const StepFn& g,
                       WayBelowStrategy strategy, std::size_t subset_cap) {
  check_compatible(f, g);
  PreimageStrategy ps = strategy == WayBelowStrategy::Spectral
                            ? PreimageStrategy::Formula
                            : PreimageStrategy::Cells;
  const auto& comps = f.components();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    OpenSet region = preimage_way_above(g, comps[i].box, ps, subset_cap);
    if (!is_subset(comps[i].open, region))
      return {false, "component #" + std::to_string(i)};
  }
  return {true, std::nullopt};
}

StepFn interpolate(const std::vector<StepFn>& A, const StepFn& g) {
  for (std::size_t i = 0; i < A.size(); ++i) {
    check_compatible(A[i], g);
    if (!way_below(A[i], g, WayBelowStrategy::AbsBasis).holds)
      throw NotWayBelow("input function is not way below the target",
                        static_cast<int>(i));
  }
  // Refine by every open set in sight; on each cell both every member of A
  // and g are constant.  For a component (W, b) of some member and a cell
  // inside W, the midpoint between b and g's value there is strictly
  // between them in the way-below order, which is exactly what the output
  // needs componentwise.
  std::vector<const StepFn*> fns;
  for (const auto& f : A) fns.push_back(&f);
  fns.push_back(&g);
  CellTable t = joint_cells(g.carrier(), fns);
  std::vector<Box> gvals;
  gvals.reserve(t.reps.size());
  for (const auto& r : t.reps) gvals.push_back(eval(g, r));
  std::vector<StepComponent> out;
  for (const auto& f : A) {
    for (const auto& comp : f.components()) {
      for (std::size_t ci = 0; ci < t.cells.size(); ++ci) {
        if (!comp.open.contains(t.reps[ci])) continue;
        out.push_back({t.cells[ci], box_midpoint(comp.box, gvals[ci])});
      }
    }
  }
  return make_stepfn(g.carrier(), g.dim(), std::move(out));
}

}  // namespace specdom
