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

#include "specdom/ivp.hpp"

#include <sstream>
#include <utility>

#include "specdom/errors.hpp"

namespace specdom {

namespace {

using Interval = Box::Interval;

// y + delta * F-value, coordinatewise; delta > 0, so scaling keeps order.
Box advance_node(const Box& y, const Box& f, const Rational& delta) {
  std::vector<Interval> out;
  out.reserve(y.dims().size());
  for (std::size_t d = 0; d < y.dims().size(); ++d) {
    out.push_back({y.dims()[d].first + delta * f.dims()[d].first,
                   y.dims()[d].second + delta * f.dims()[d].second});
  }
  return Box::make(std::move(out));
}

// y + [0, delta] * F-value:  [0, delta] * [p, q] = [min(0, delta p),
// max(0, delta q)] — the reach over the whole step, not just its end.
Box advance_piece(const Box& y, const Box& f, const Rational& delta) {
  const Rational zero(0);
  std::vector<Interval> out;
  out.reserve(y.dims().size());
  for (std::size_t d = 0; d < y.dims().size(); ++d) {
    out.push_back(
        {y.dims()[d].first + rat_min(zero, delta * f.dims()[d].first),
         y.dims()[d].second + rat_max(zero, delta * f.dims()[d].second)});
  }
  return Box::make(std::move(out));
}

// Hull of a and b, padded per coordinate by width/10 + 1/1024 on each side.
Box padded_hull(const Box& a, const Box& b) {
  const Rational floor_pad(1, 1024);
  Box hull = box_meet({a, b});
  std::vector<Interval> out;
  out.reserve(hull.dims().size());
  for (const auto& iv : hull.dims()) {
    Rational pad = (iv.second - iv.first) / Rational(10) + floor_pad;
    out.push_back({iv.first - pad, iv.second + pad});
  }
  return Box::make(std::move(out));
}

// The enclosure's value at time t: node 0 at the left end, otherwise the
// piece whose half-open time piece contains t.
const Box& value_at(const IvpProblem& p, const Enclosure& e,
                    const Rational& t) {
  if (t < p.t0 || p.t1 < t)
    throw PointOutsideCarrier("time " + t.str() + " is outside [" +
                              p.t0.str() + "," + p.t1.str() + "]");
  if (t == p.t0) return e.nodes.at(0);
  for (std::size_t j = 0; j + 1 < e.grid.size(); ++j)
    if (e.grid[j] < t && t <= e.grid[j + 1]) return e.pieces.at(j);
  throw InvalidArgument("enclosure grid does not cover its time window");
}

}  // namespace

IvpProblem make_ivp(VectorField field, Box y0, Rational t0, Rational t1,
                    int pieces) {
  if (y0.is_bottom())
    throw InvalidArgument("initial box must be bounded");
  if (y0.dim() != field.dim())
    throw DimensionMismatch("initial box arity differs from field arity");
  if (!(t0 < t1))
    throw InvalidArgument("time window needs t0 < t1");
  if (pieces < 1)
    throw InvalidArgument("partition needs at least one piece");
  return IvpProblem{std::move(field), std::move(y0), std::move(t0),
                    std::move(t1), pieces};
}

Box apriori_bound(const VectorField& field, const Box& y,
                  const Rational& delta, int max_rounds) {
  if (y.is_bottom())
    throw BottomInput("a-priori bound needs a bounded entry box");
  if (!(delta > Rational(0)))
    throw InvalidArgument("step length must be positive");
  // Escape hatch for genuinely divergent widening: with a superlinear field
  // the candidate endpoints can square every round, so exact rationals blow
  // up long before the round cap.  Once an endpoint leaves this range no
  // realistic entry box is ever certified, so give up immediately.
  static const Rational kEscape = [] {
    Rational v(2);
    for (int i = 0; i < 8; ++i) v *= v;  // 2^256
    return v;
  }();
  Box bound = y;
  for (int round = 0; round < max_rounds; ++round) {
    Box candidate = advance_piece(y, eval_field(field, bound), delta);
    // candidate inside bound — in the information order, bound <= candidate.
    if (box_leq(bound, candidate)) return bound;
    bound = padded_hull(bound, candidate);
    for (int d = 0; d < bound.dim(); ++d) {
      if (rat_abs(bound.low(d)) > kEscape || rat_abs(bound.high(d)) > kEscape)
        throw DivergenceBound("a-priori bound search escaped after " +
                              std::to_string(round + 1) + " widening rounds");
    }
  }
  throw DivergenceBound("no a-priori bound within " +
                        std::to_string(max_rounds) + " widening rounds");
}

Enclosure initial_enclosure(const IvpProblem& p) {
  Enclosure e;
  Rational h = (p.t1 - p.t0) / Rational(p.pieces);
  for (int j = 0; j <= p.pieces; ++j)
    e.grid.push_back(p.t0 + Rational(j) * h);
  e.nodes.assign(static_cast<std::size_t>(p.pieces) + 1, Box::bottom());
  e.nodes[0] = p.y0;
  e.pieces.assign(static_cast<std::size_t>(p.pieces), Box::bottom());
  return e;
}

Enclosure phi_apply(const IvpProblem& p, const Enclosure& e) {
  if (e.nodes.size() != static_cast<std::size_t>(p.pieces) + 1 ||
      e.pieces.size() != static_cast<std::size_t>(p.pieces) ||
      e.grid.size() != static_cast<std::size_t>(p.pieces) + 1)
    throw InvalidArgument("enclosure shape does not match the problem");
  Rational h = (p.t1 - p.t0) / Rational(p.pieces);
  Enclosure out;
  out.grid = e.grid;
  out.nodes.assign(e.nodes.size(), Box::bottom());
  out.pieces.assign(e.pieces.size(), Box::bottom());
  out.nodes[0] = p.y0;
  for (int j = 0; j < p.pieces; ++j) {
    const Box& y = out.nodes[j];  // already updated this sweep
    Box bound = Box::bottom();
    try {
      bound = apriori_bound(p.field, y, h);
    } catch (const DivergenceBound& d) {
      throw DivergenceBound(std::string(d.what()) + " (piece " +
                                std::to_string(j) + ")",
                            j);
    }
    // Refine by what the previous round knew about this piece; the hull
    // keeps the result a box.
    Box reach = e.pieces[j].is_bottom() ? bound
                                        : box_meet({bound, e.pieces[j]});
    Box f = eval_field(p.field, reach);
    out.pieces[j] = advance_piece(y, f, h);
    out.nodes[j + 1] = advance_node(y, f, h);
  }
  return out;
}

SolveResult solve_fixpoint(const IvpProblem& p) {
  Enclosure prev = initial_enclosure(p);
  const int cap = p.pieces + 2;
  for (int i = 1; i <= cap; ++i) {
    Enclosure cur = phi_apply(p, prev);
    if (cur == prev) return {std::move(cur), i};
    prev = std::move(cur);
  }
  throw NoConvergence("no fixpoint within " + std::to_string(cap) +
                          " applications",
                      cap);
}

std::optional<Rational> enclosure_width(const Enclosure& e) {
  Rational best(0);
  for (const auto& piece : e.pieces) {
    auto w = box_width(piece);
    if (!w) return std::nullopt;
    best = rat_max(best, *w);
  }
  return best;
}

StepFn enclosure_to_stepfn(const IvpProblem& p, const Enclosure& e) {
  Carrier carrier(p.t0, p.t1);
  std::vector<StepComponent> comps;
  comps.push_back({OpenSet(carrier, {HalfOpenPiece::from_left_end(p.t0)}),
                   e.nodes.at(0)});
  for (std::size_t j = 0; j + 1 < e.grid.size(); ++j) {
    comps.push_back(
        {OpenSet(carrier, {HalfOpenPiece::open(e.grid[j], e.grid[j + 1])}),
         e.pieces.at(j)});
  }
  return make_stepfn(carrier, p.field.dim(), std::move(comps));
}

bool enclosure_contains(const IvpProblem& p, const Enclosure& e,
                        const Rational& t, const Box& v) {
  if (!v.is_bottom() && v.dim() != p.field.dim())
    throw DimensionMismatch("value arity differs from field arity");
  return box_leq(value_at(p, e, t), v);
}

std::string enclosure_csv(const IvpProblem& p, const Enclosure& e) {
  std::ostringstream out;
  out << "kind,q_lo,q_hi";
  for (int d = 1; d <= p.field.dim(); ++d)
    out << ",y" << d << "_lo,y" << d << "_hi";
  out << "\n";
  auto bounds = [&](const Box& b) {
    for (int d = 0; d < p.field.dim(); ++d) {
      if (b.is_bottom())
        out << ",,";
      else
        out << "," << b.dims()[d].first.str() << ","
            << b.dims()[d].second.str();
    }
    out << "\n";
  };
  for (std::size_t j = 0; j < e.pieces.size(); ++j) {
    out << "node," << e.grid[j].str() << "," << e.grid[j].str();
    bounds(e.nodes[j]);
    out << "piece," << e.grid[j].str() << "," << e.grid[j + 1].str();
    bounds(e.pieces[j]);
  }
  out << "node," << e.grid.back().str() << "," << e.grid.back().str();
  bounds(e.nodes.back());
  return out.str();
}

}  // namespace specdom
