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

#include "specdom/field_expr.hpp"
#include "specdom/step_function.hpp"

namespace specdom {

// y' = F(y), y(t0) in y0, solved for a validated enclosure over [t0, t1] on
// a uniform partition.  All arithmetic is exact rational interval
// arithmetic, so the enclosure bounds are mathematically sound for every
// true solution starting in y0 (F being a polynomial field, locally
// Lipschitz, solutions are unique while they exist).
struct IvpProblem {
  VectorField field;
  Box y0;  // non-bottom; typically degenerate (a point)
  Rational t0, t1;
  int pieces;
};

// Validates arities, non-bottom y0, t0 < t1, pieces >= 1.
IvpProblem make_ivp(VectorField field, Box y0, Rational t0, Rational t1,
                    int pieces);

// Piecewise data of one enclosure candidate: k+1 grid times, k+1 node boxes
// (values at grid times), k piece boxes (values over each half-open piece).
// Bottom boxes mean "no information yet".
struct Enclosure {
  std::vector<Rational> grid;
  std::vector<Box> nodes;
  std::vector<Box> pieces;

  friend bool operator==(const Enclosure& a, const Enclosure& b) {
    return a.grid == b.grid && a.nodes == b.nodes && a.pieces == b.pieces;
  }
  friend bool operator!=(const Enclosure& a, const Enclosure& b) {
    return !(a == b);
  }
};

// A box B with y + [0, delta] * F(B) inside B — every solution starting in y
// stays in B for the next delta of time.  Search: start at y, test the
// candidate, widen to the padded hull on failure (pad: a tenth of the hull
// width plus 1/1024, per side and coordinate).  Returns the accepted B.
// Throws DivergenceBound after max_rounds failures, BottomInput on bottom y.
Box apriori_bound(const VectorField& field, const Box& y,
                  const Rational& delta, int max_rounds = 60);

// The starting point of the iteration: node 0 is y0, everything else Bottom.
Enclosure initial_enclosure(const IvpProblem& p);

// One sweep of the validated Euler functional, propagating left to right:
// within the sweep each piece update already sees the updated previous
// node.  Per piece j with entry box y (the updated node):
//   B = a-priori bound for y over one step h,
//   R = hull of B and the previous piece value (B alone when that is Bottom),
//   new piece = y + [0, h] * F(R),   new node  = y + h * F(R).
// Throws DivergenceBound (tagged with the piece) when no bound is found.
Enclosure phi_apply(const IvpProblem& p, const Enclosure& e);

// Iterates phi_apply from the initial enclosure until the data repeats
// exactly; `iterations` counts the applications made.  Caps at pieces + 2
// applications and throws NoConvergence beyond the cap.
struct SolveResult {
  Enclosure enclosure;
  int iterations = 0;
};
SolveResult solve_fixpoint(const IvpProblem& p);

// Largest coordinate width among the piece boxes; nullopt when some piece is
// still Bottom (infinite width).
std::optional<Rational> enclosure_width(const Enclosure& e);

// The enclosure as a step function on [t0, t1]: the initial node on the
// singleton {t0} and each piece box on its half-open time piece.
StepFn enclosure_to_stepfn(const IvpProblem& p, const Enclosure& e);

// Does the enclosure admit the value box v at time t — is v inside the
// enclosure's value there?  Uses the piece whose half-open time piece
// contains t (the initial node at t = t0).  Throws PointOutsideCarrier for
// t outside [t0, t1].
bool enclosure_contains(const IvpProblem& p, const Enclosure& e,
                        const Rational& t, const Box& v);

// CSV rendering: kind,q_lo,q_hi then exact lo/hi bounds per dimension; node
// rows (kind "node", q_lo = q_hi) interleaved with piece rows.
std::string enclosure_csv(const IvpProblem& p, const Enclosure& e);

}  // namespace specdom
