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

#include <string>

#include "specdom/box.hpp"
#include "specdom/ivp.hpp"
#include "specdom/lattice.hpp"
#include "specdom/open_set.hpp"
#include "specdom/step_function.hpp"

namespace specdom {

// JSON text for the stable on-disk formats.  Rationals travel as exact
// strings ("p/q" or an integer string) so nothing is ever rounded.
//
//   box      {"bottom":true} | {"dims":[["0","2"],["1","5"]]}
//   open set {"carrier":["0","3"],"pieces":[["leftend","0"],["1/2","2"]]}
//            (a piece is [lower, upper]; lower "leftend" means the piece is
//            closed at the carrier's left endpoint)
//   step fn  {"carrier":["0","3"],"dim":1,
//             "components":[{"open":{...},"box":{...}}]}
//   lattice  {"elements":["bot","top"],"leq":[[1,1],[0,1]],
//             "labels":{"bot":{...open set...},...}}   (labels optional)
//   problem  {"n":1,"t0":"0","T":"1","y0":{...box...},"field":"y1"}
//
// Parsers throw ParseError for malformed JSON or schema violations; the
// semantic constructors behind them keep their own exceptions (for example
// InvalidLattice, InconsistentJoin).  Every *_to_json output re-parses to a
// structurally equal value.

std::string box_to_json(const Box& b);
Box box_from_json(const std::string& text);

std::string open_set_to_json(const OpenSet& s);
OpenSet open_set_from_json(const std::string& text);

std::string stepfn_to_json(const StepFn& f);
StepFn stepfn_from_json(const std::string& text);

std::string lattice_to_json(const FinDistLattice& L);
FinDistLattice lattice_from_json(const std::string& text);

// The partition piece count is a run-time choice, not part of the file.
std::string problem_to_json(const IvpProblem& p);
IvpProblem problem_from_json(const std::string& text, int pieces);

}  // namespace specdom
