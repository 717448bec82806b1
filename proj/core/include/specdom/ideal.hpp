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

#include "specdom/open_set.hpp"

namespace specdom {

// The ideal of everything below one open set.  These are the finite
// elements of the ideal completion of the open ring: order, way-below,
// joins and meets all reduce to the generators, which is what makes the
// completion computable piecewise.
struct PrincipalIdeal {
  OpenSet gen;

  friend bool operator==(const PrincipalIdeal& a, const PrincipalIdeal& b) {
    return a.gen == b.gen;
  }
  friend bool operator!=(const PrincipalIdeal& a, const PrincipalIdeal& b) {
    return !(a == b);
  }
};

// Ideal inclusion is generator inclusion.
bool ideal_leq(const PrincipalIdeal& a, const PrincipalIdeal& b);

// On principal ideals the way-below relation coincides with the order:
// each one is a finite (compact) element of the completion.
bool ideal_way_below(const PrincipalIdeal& a, const PrincipalIdeal& b);

// Join and meet are taken on the generators (union / intersection).
PrincipalIdeal ideal_join(const PrincipalIdeal& a, const PrincipalIdeal& b);
PrincipalIdeal ideal_meet(const PrincipalIdeal& a, const PrincipalIdeal& b);

// Membership of an ideal in the trace of a carrier point x: true iff the
// generator contains x.  The traces are the image of the carrier inside the
// spectral space, so this is the computational face of that embedding.
bool iota_mem(const Rational& x, const PrincipalIdeal& ideal);

}  // namespace specdom
