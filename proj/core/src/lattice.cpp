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

#include "specdom/lattice.hpp"

#include <algorithm>
#include <set>

#include "specdom/errors.hpp"

namespace specdom {

namespace {

// Greatest member of `candidates` under `leq`, or -1 when there is none.
int unique_greatest(const std::vector<std::vector<bool>>& leq,
                    const std::vector<int>& candidates) {
  for (int g : candidates) {
    bool greatest = true;
    for (int u : candidates) {
      if (!leq[u][g]) {
        greatest = false;
        break;
      }
    }
    if (greatest) return g;
  }
  return -1;
}

}  // namespace

int FinDistLattice::meet(int a, int b) const {
  if (!meet_.empty()) return meet_[a][b];
  auto idx = index_of(set_intersect((*labels_)[a], (*labels_)[b]));
  if (!idx) throw InvalidLattice("labels not closed under intersection");
  return *idx;
}

int FinDistLattice::join(int a, int b) const {
  if (!join_.empty()) return join_[a][b];
  auto idx = index_of(set_union((*labels_)[a], (*labels_)[b]));
  if (!idx) throw InvalidLattice("labels not closed under union");
  return *idx;
}

std::optional<int> FinDistLattice::index_of(const OpenSet& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void FinDistLattice::build_tables() {
  const int n = size();
  meet_.assign(n, std::vector<int>(n, -1));
  join_.assign(n, std::vector<int>(n, -1));
  std::vector<int> lower, upper;
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      lower.clear();
      upper.clear();
      for (int u = 0; u < n; ++u) {
        if (leq_[u][a] && leq_[u][b]) lower.push_back(u);
        if (leq_[a][u] && leq_[b][u]) upper.push_back(u);
      }
      int glb = unique_greatest(leq_, lower);
      // lub: unique least of the common upper bounds = unique greatest in
      // the reversed order.
      int lub = -1;
      for (int g : upper) {
        bool least = true;
        for (int u : upper) {
          if (!leq_[g][u]) {
            least = false;
            break;
          }
        }
        if (least) {
          lub = g;
          break;
        }
      }
      if (glb < 0 || lub < 0)
        throw InvalidLattice("elements " + names_[a] + " and " + names_[b] +
                             " lack a meet or a join");
      meet_[a][b] = meet_[b][a] = glb;
      join_[a][b] = join_[b][a] = lub;
    }
  }
}

FinDistLattice FinDistLattice::from_leq(
    std::vector<std::string> names, std::vector<std::vector<bool>> leq,
    std::optional<std::vector<OpenSet>> labels) {
  const std::size_t n = names.size();
  if (n == 0) throw InvalidLattice("lattice needs at least one element");
  if (n > kValidationCap)
    throw InvalidLattice("lattice too large for full validation (" +
                         std::to_string(n) + " > " +
                         std::to_string(kValidationCap) + " elements)");
  if (leq.size() != n)
    throw InvalidLattice("order matrix has wrong number of rows");
  for (const auto& row : leq)
    if (row.size() != n) throw InvalidLattice("order matrix is ragged");
  if (labels && labels->size() != n)
    throw InvalidLattice("label count differs from element count");

  // Partial order.
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq[a][a]) throw InvalidLattice("order not reflexive");
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && leq[a][b] && leq[b][a])
        throw InvalidLattice("order not antisymmetric");
      for (std::size_t c = 0; c < n; ++c) {
        if (leq[a][b] && leq[b][c] && !leq[a][c])
          throw InvalidLattice("order not transitive");
      }
    }
  }

  FinDistLattice L;
  L.names_ = std::move(names);
  L.leq_ = std::move(leq);
  L.build_tables();  // also proves every pair has a meet and a join

  // Bounds.
  L.bottom_ = L.top_ = -1;
  for (std::size_t e = 0; e < n; ++e) {
    bool is_bot = true, is_top = true;
    for (std::size_t u = 0; u < n; ++u) {
      is_bot = is_bot && L.leq_[e][u];
      is_top = is_top && L.leq_[u][e];
    }
    if (is_bot) L.bottom_ = static_cast<int>(e);
    if (is_top) L.top_ = static_cast<int>(e);
  }
  if (L.bottom_ < 0 || L.top_ < 0)
    throw InvalidLattice("lattice lacks a bottom or a top element");

  // Distributivity.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        int lhs = L.meet_[a][L.join_[b][c]];
        int rhs = L.join_[L.meet_[a][b]][L.meet_[a][c]];
        if (lhs != rhs) throw InvalidLattice("lattice is not distributive");
      }
    }
  }

  if (labels) {
    for (std::size_t a = 0; a < n; ++a) {
      if ((*labels)[a].carrier() != (*labels)[0].carrier())
        throw InvalidLattice("labels live over different carriers");
      for (std::size_t b = 0; b < n; ++b) {
        if (L.leq_[a][b] != is_subset((*labels)[a], (*labels)[b]))
          throw InvalidLattice("order disagrees with label inclusion");
      }
    }
    for (std::size_t a = 0; a < n; ++a)
      L.index_.emplace((*labels)[a], static_cast<int>(a));
    if (L.index_.size() != n) throw InvalidLattice("duplicate labels");
    L.labels_ = std::move(labels);
  }
  return L;
}

FinDistLattice FinDistLattice::from_open_sets(std::vector<OpenSet> elements) {
  if (elements.empty())
    throw InvalidLattice("lattice needs at least one element");
  std::sort(elements.begin(), elements.end());
  const int n = static_cast<int>(elements.size());

  FinDistLattice L;
  L.leq_.assign(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      L.leq_[a][b] = is_subset(elements[a], elements[b]);
  }
  for (int a = 0; a < n; ++a) {
    L.names_.push_back(elements[a].str());
    L.index_.emplace(elements[a], a);
    if (elements[a].is_empty()) L.bottom_ = a;
    if (elements[a].is_full()) L.top_ = a;
  }
  if (static_cast<int>(L.index_.size()) != n)
    throw InvalidLattice("duplicate elements");
  if (L.bottom_ < 0 || L.top_ < 0)
    throw InvalidLattice("element family lacks {} or the full carrier");
  L.labels_ = std::move(elements);

  // Closure under the set operations (which then realize meet/join, since
  // inclusion-ordered set families compute glb/lub by exactly those).
  if (n <= 512) {
    L.meet_.assign(n, std::vector<int>(n, -1));
    L.join_.assign(n, std::vector<int>(n, -1));
    for (int a = 0; a < n; ++a) {
      for (int b = a; b < n; ++b) {
        auto mi = L.index_of(set_intersect((*L.labels_)[a], (*L.labels_)[b]));
        auto ji = L.index_of(set_union((*L.labels_)[a], (*L.labels_)[b]));
        if (!mi || !ji)
          throw InvalidLattice("element family not closed under union and "
                               "intersection");
        L.meet_[a][b] = L.meet_[b][a] = *mi;
        L.join_[a][b] = L.join_[b][a] = *ji;
      }
    }
  } else {
    // Tables would be quadratic in a large closure; verify closure lazily in
    // meet()/join().  Spot-check a diagonal here so obviously bad input
    // still fails fast.
    for (int a = 0; a < n; ++a) {
      if (!L.index_of(set_union((*L.labels_)[a], (*L.labels_)[(a + 1) % n])))
        throw InvalidLattice("element family not closed under union");
    }
  }
  return L;
}

FinDistLattice generate_lattice(const Carrier& carrier,
                                const std::vector<OpenSet>& generators,
                                std::size_t cap) {
  std::set<OpenSet> closure;
  closure.insert(OpenSet::empty(carrier));
  closure.insert(OpenSet::full(carrier));
  for (const OpenSet& g : generators) {
    if (g.carrier() != carrier)
      throw CarrierMismatch("generator over carrier " + g.carrier().str() +
                            ", expected " + carrier.str());
    closure.insert(g);
  }
  if (closure.size() > cap)
    throw EnumerationCapExceeded("lattice closure exceeds cap " +
                                 std::to_string(cap));

  // Worklist closure: every round combines the newcomers against everything
  // known; pairs among the newcomers themselves are covered the round after.
  std::vector<OpenSet> frontier(closure.begin(), closure.end());
  while (!frontier.empty()) {
    std::vector<OpenSet> known(closure.begin(), closure.end());
    std::vector<OpenSet> added;
    for (const OpenSet& x : frontier) {
      for (const OpenSet& y : known) {
        for (OpenSet z : {set_union(x, y), set_intersect(x, y)}) {
          if (closure.insert(z).second) {
            if (closure.size() > cap)
              throw EnumerationCapExceeded("lattice closure exceeds cap " +
                                           std::to_string(cap));
            added.push_back(std::move(z));
          }
        }
      }
    }
    frontier = std::move(added);
  }

  return FinDistLattice::from_open_sets(
      std::vector<OpenSet>(closure.begin(), closure.end()));
}

bool PrimeFilter::contains(int e) const {
  return std::binary_search(members.begin(), members.end(), e);
}

bool is_prime_filter(const FinDistLattice& L, const PrimeFilter& f) {
  const int n = L.size();
  if (f.members.empty()) return false;
  std::vector<bool> in(n, false);
  for (int e : f.members) {
    if (e < 0 || e >= n) return false;
    in[e] = true;
  }
  if (in[L.bottom()]) return false;  // proper
  for (int e : f.members) {
    for (int u = 0; u < n; ++u) {
      if (L.leq(e, u) && !in[u]) return false;  // upward closed
    }
    for (int d : f.members) {
      if (!in[L.meet(e, d)]) return false;  // closed under meets
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (in[L.join(u, v)] && !in[u] && !in[v]) return false;  // prime
    }
  }
  return true;
}

namespace {

PrimeFilter principal_filter(const FinDistLattice& L, int e) {
  PrimeFilter f;
  for (int u = 0; u < L.size(); ++u) {
    if (L.leq(e, u)) f.members.push_back(u);
  }
  return f;
}

std::vector<PrimeFilter> prime_filters_irreducible(const FinDistLattice& L) {
  std::vector<PrimeFilter> out;
  for (int e = 0; e < L.size(); ++e) {
    if (e == L.bottom()) continue;
    // e is join-irreducible iff the join of everything strictly below it
    // stays strictly below it.
    int fold = L.bottom();
    for (int u = 0; u < L.size(); ++u) {
      if (u != e && L.leq(u, e)) fold = L.join(fold, u);
    }
    if (fold != e) out.push_back(principal_filter(L, e));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PrimeFilter> prime_filters_exhaustive(const FinDistLattice& L,
                                                  std::size_t cap) {
  const int n = L.size();
  if (static_cast<std::size_t>(n) > cap)
    throw EnumerationCapExceeded(
        "exhaustive prime-filter enumeration capped at " + std::to_string(cap) +
        " elements, lattice has " + std::to_string(n));

  // Enumerate upward-closed subsets: visit elements in an order where all
  // elements above come first; an element may join the set only when
  // everything above it is already in.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int above_a = 0, above_b = 0;
    for (int u = 0; u < n; ++u) {
      if (L.leq(a, u)) ++above_a;
      if (L.leq(b, u)) ++above_b;
    }
    if (above_a != above_b) return above_a < above_b;
    return a < b;
  });

  std::vector<PrimeFilter> out;
  std::vector<bool> in(n, false);
  std::vector<int> chosen;
  auto rec = [&](auto&& self, int at) -> void {
    if (at == n) {
      PrimeFilter f;
      f.members = chosen;
      std::sort(f.members.begin(), f.members.end());
      if (is_prime_filter(L, f)) out.push_back(std::move(f));
      return;
    }
    int e = order[at];
    bool can_include = true;
    for (int u = 0; u < n; ++u) {
      if (u != e && L.leq(e, u) && !in[u]) {
        can_include = false;
        break;
      }
    }
    if (can_include) {
      in[e] = true;
      chosen.push_back(e);
      self(self, at + 1);
      chosen.pop_back();
      in[e] = false;
    }
    self(self, at + 1);
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<PrimeFilter> prime_filters(const FinDistLattice& L,
                                       PrimeFilterStrategy strategy,
                                       std::size_t exhaustive_cap) {
  switch (strategy) {
    case PrimeFilterStrategy::JoinIrreducible:
      return prime_filters_irreducible(L);
    case PrimeFilterStrategy::Exhaustive:
      return prime_filters_exhaustive(L, exhaustive_cap);
  }
  throw InvalidArgument("unknown prime filter strategy");
}

SpectralSpace hull_kernel_space(const FinDistLattice& L,
                                PrimeFilterStrategy strategy) {
  SpectralSpace space;
  space.points = prime_filters(L, strategy);
  space.opens.assign(L.size(), {});
  for (int u = 0; u < L.size(); ++u) {
    for (int p = 0; p < static_cast<int>(space.points.size()); ++p) {
      if (space.points[p].contains(u)) space.opens[u].push_back(p);
    }
  }
  return space;
}

RoundtripReport roundtrip_iso_check(const FinDistLattice& L,
                                    PrimeFilterStrategy strategy) {
  SpectralSpace space = hull_kernel_space(L, strategy);
  RoundtripReport report;
  report.points = static_cast<int>(space.points.size());
  report.opens = L.size();

  auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  auto set_op = [](const std::vector<int>& a, const std::vector<int>& b,
                   bool want_union) {
    std::vector<int> out;
    if (want_union)
      std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                     std::back_inserter(out));
    else
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::back_inserter(out));
    return out;
  };

  for (int u = 0; u < L.size(); ++u) {
    for (int v = 0; v < L.size(); ++v) {
      if (u != v && space.opens[u] == space.opens[v]) return report;
      if (L.leq(u, v) != subset(space.opens[u], space.opens[v])) return report;
      if (space.opens[L.join(u, v)] !=
          set_op(space.opens[u], space.opens[v], true))
        return report;
      if (space.opens[L.meet(u, v)] !=
          set_op(space.opens[u], space.opens[v], false))
        return report;
    }
  }
  report.isomorphic = true;
  return report;
}

}  // namespace specdom
