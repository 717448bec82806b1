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

#include "specdom/ideal.hpp"

namespace specdom {

bool ideal_leq(const PrincipalIdeal& a, const PrincipalIdeal& b) {
  return is_subset(a.gen, b.gen);
}

bool ideal_way_below(const PrincipalIdeal& a, const PrincipalIdeal& b) {
  return is_subset(a.gen, b.gen);
}

PrincipalIdeal ideal_join(const PrincipalIdeal& a, const PrincipalIdeal& b) {
  return PrincipalIdeal{set_union(a.gen, b.gen)};
}

PrincipalIdeal ideal_meet(const PrincipalIdeal& a, const PrincipalIdeal& b) {
  return PrincipalIdeal{set_intersect(a.gen, b.gen)};
}

bool iota_mem(const Rational& x, const PrincipalIdeal& ideal) {
  return ideal.gen.contains(x);
}

}  // namespace specdom
