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

// Microbenchmarks for the hot paths: open-set algebra, lattice generation
// and spectrum enumeration, the two step-function order deciders, and the
// interval solver.  Fixed seeds keep every run on identical inputs.

#include <benchmark/benchmark.h>

#include <cstddef>
#include <utility>
#include <vector>

#include "specdom/box.hpp"
#include "specdom/field_expr.hpp"
#include "specdom/ivp.hpp"
#include "specdom/lattice.hpp"
#include "specdom/open_set.hpp"
#include "specdom/sampling.hpp"
#include "specdom/step_function.hpp"

namespace {

using namespace specdom;

const Carrier kCarrier(Rational(0), Rational(4));

std::vector<std::pair<OpenSet, OpenSet>> open_pairs(std::size_t n) {
  Sampler s(101);
  std::vector<std::pair<OpenSet, OpenSet>> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.emplace_back(s.open_set(kCarrier, 4, 16), s.open_set(kCarrier, 4, 16));
  }
  return out;
}

void BM_OpenSetUnion(benchmark::State& state) {
  auto pairs = open_pairs(64);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(set_union(a, b));
  }
}
BENCHMARK(BM_OpenSetUnion);

void BM_OpenSetIntersect(benchmark::State& state) {
  auto pairs = open_pairs(64);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(set_intersect(a, b));
  }
}
BENCHMARK(BM_OpenSetIntersect);

void BM_GenerateLattice(benchmark::State& state) {
  Sampler s(102);
  auto gens = s.generators(kCarrier, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate_lattice(kCarrier, gens));
  }
}
BENCHMARK(BM_GenerateLattice)->Arg(3)->Arg(5);

void BM_PrimeFilters(benchmark::State& state) {
  Sampler s(103);
  auto gens = s.generators(kCarrier, static_cast<int>(state.range(0)));
  FinDistLattice L = generate_lattice(kCarrier, gens);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        prime_filters(L, PrimeFilterStrategy::JoinIrreducible));
  }
}
BENCHMARK(BM_PrimeFilters)->Arg(3)->Arg(5);

std::vector<std::pair<StepFn, StepFn>> stepfn_pairs(std::size_t n) {
  Sampler s(104);
  std::vector<std::pair<StepFn, StepFn>> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(s.way_below_pair(kCarrier, 1));
  }
  return out;
}

void BM_OrderCells(benchmark::State& state) {
  auto pairs = stepfn_pairs(32);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [f, g] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(order_cells(f, g));
  }
}
BENCHMARK(BM_OrderCells);

void BM_OrderPrimeFilters(benchmark::State& state) {
  auto pairs = stepfn_pairs(32);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [f, g] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(order_primefilters(f, g));
  }
}
BENCHMARK(BM_OrderPrimeFilters);

void BM_SolveFixpoint(benchmark::State& state) {
  IvpProblem p = make_ivp(parse_field("y1"), Box::point({Rational(1)}),
                          Rational(0), Rational(1),
                          static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_fixpoint(p));
  }
}
BENCHMARK(BM_SolveFixpoint)->Arg(4)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
