// Copyright 2026 The exclear Authors
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

#include <benchmark/benchmark.h>

#include "exclear/formulations.hpp"
#include "exclear/pricing.hpp"
#include "exclear/solver.hpp"

namespace {

exclear::Instance instance(int ndds, int pairs, double density, int K, int L,
                           std::uint64_t seed = 1) {
  exclear::GeneratorParams params;
  params.num_ndds = ndds;
  params.num_pairs = pairs;
  params.arc_density = density;
  params.cycle_cap = K;
  params.chain_cap = L;
  params.seed = seed;
  return exclear::generate_random(params);
}

void BM_BuildFormulation(benchmark::State& state) {
  const auto f = static_cast<exclear::Formulation>(state.range(0));
  const exclear::Instance inst = instance(f == exclear::Formulation::kPief ? 0 : 4,
                                          static_cast<int>(state.range(1)), 0.1, 3, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exclear::build_formulation(inst, f));
  }
  state.SetLabel(exclear::formulation_name(f));
}
BENCHMARK(BM_BuildFormulation)
    ->ArgsProduct({{static_cast<int>(exclear::Formulation::kCf),
                    static_cast<int>(exclear::Formulation::kPief),
                    static_cast<int>(exclear::Formulation::kPicef),
                    static_cast<int>(exclear::Formulation::kHpief)},
                   {30, 60}})
    ->Unit(benchmark::kMicrosecond);

void BM_SimplexRelaxation(benchmark::State& state) {
  const exclear::Instance inst = instance(3, static_cast<int>(state.range(0)), 0.1, 3, 4);
  const exclear::MipModel model = exclear::build_picef(inst, false);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exclear::simplex_solve(model));
  }
  state.counters["rows"] = model.num_constraints();
  state.counters["cols"] = model.num_variables();
}
BENCHMARK(BM_SimplexRelaxation)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_BranchAndBound(benchmark::State& state) {
  const exclear::Instance inst = instance(2, static_cast<int>(state.range(0)), 0.12, 3, 3);
  const exclear::MipModel model = exclear::build_picef(inst, true);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exclear::branch_and_bound(model));
  }
}
BENCHMARK(BM_BranchAndBound)->Arg(15)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_DiscountedPricing(benchmark::State& state) {
  const exclear::Instance inst =
      instance(0, static_cast<int>(state.range(0)), 0.15, static_cast<int>(state.range(1)), 0);
  exclear::PricingDuals duals;
  for (exclear::Vertex v = 1; v <= inst.num_vertices(); ++v) duals.delta[v] = 1.6;
  for (auto _ : state) {
    benchmark::DoNotOptimize(exclear::price_cycles_discounted(inst, duals, 0.8));
  }
}
BENCHMARK(BM_DiscountedPricing)
    ->ArgsProduct({{30, 60}, {3, 4}})
    ->Unit(benchmark::kMicrosecond);

void BM_BranchAndPrice(benchmark::State& state) {
  const exclear::Instance inst = instance(2, static_cast<int>(state.range(0)), 0.12, 3, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exclear::solve_picef_bnp(inst));
  }
}
BENCHMARK(BM_BranchAndPrice)->Arg(15)->Arg(30)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
