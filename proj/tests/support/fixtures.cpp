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

#include "fixtures.hpp"

#include <stdexcept>

namespace exclear::testing {

Instance figure1() {
  return build_instance(2, 5,
                        {{3, 4}, {4, 5}, {5, 3}, {3, 7}, {1, 3}, {6, 5},
                         {2, 4}, {1, 7}, {7, 6}},
                        3, 3);
}

Instance figure2(int cycle_cap) {
  return build_instance(
      0, 4, {{1, 2}, {2, 1}, {2, 3}, {3, 4}, {4, 1}, {4, 3}, {4, 2}},
      cycle_cap, 0);
}

Instance figure4() {
  return build_instance(
      2, 4,
      {{1, 3}, {1, 4}, {2, 4}, {3, 4}, {4, 5}, {5, 6}, {6, 4}, {6, 5}}, 3, 4);
}

Instance two_loops(int cycle_cap) {
  return build_instance(
      0, 8,
      {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 6}, {6, 7}, {7, 8}, {8, 1}},
      cycle_cap, 0);
}

LengthTrap length_trap(double eta, double p) {
  LengthTrap t;
  t.p = p;
  t.instance = build_instance(0, 5,
                              {{1, 2, 0.0},
                               {1, 3, eta / (p * p * p)},
                               {2, 4, 0.0},
                               {3, 4, 0.0},
                               {4, 5, 0.0},
                               {5, 1, 1.0}},
                              4, 0);
  t.duals.delta = {{1, 0.0}, {2, 0.0}, {3, eta - 1.0}, {4, 0.0}, {5, 0.0}};
  t.profitable = Cycle{{1, 2, 4, 5}};
  return t;
}

Instance random_instance(std::mt19937_64& rng, const RandomSpec& spec) {
  auto pick = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  GeneratorParams params;
  params.num_ndds = pick(spec.min_ndds, spec.max_ndds);
  params.num_pairs = pick(spec.min_pairs, spec.max_pairs);
  params.cycle_cap = pick(spec.min_cycle_cap, spec.max_cycle_cap);
  params.chain_cap = pick(spec.min_chain_cap, spec.max_chain_cap);
  params.arc_density =
      std::uniform_real_distribution<double>(spec.min_density, spec.max_density)(rng);
  if (spec.integer_weights) {
    params.weights = {WeightSpec::Mode::kUniformInt, 1, 5};
  }
  params.seed = rng();
  params.failure_prob = spec.failure_prob;
  return generate_random(params);
}

PricingDuals random_duals(std::mt19937_64& rng, const Instance& instance,
                          double lo, double hi) {
  std::uniform_real_distribution<double> draw(lo, hi);
  PricingDuals duals;
  for (Vertex v = instance.first_pair(); v <= instance.num_vertices(); ++v) {
    duals.delta[v] = draw(rng);
  }
  return duals;
}

double mip_value(const Instance& instance, Formulation formulation) {
  MipModel model = build_formulation(instance, formulation);
  if (instance.failure_prob()) model = apply_failure_objective(model, instance);
  const MipOutcome out = solve_mip(model);
  if (out.status != MipStatus::kOptimal) {
    throw std::runtime_error("MIP not solved to optimality");
  }
  // Round trip through the decoder so every test also checks the packing.
  const Solution s = decode_solution(model, out.assignment, instance);
  return s.expected_weight && model.discount() ? *s.expected_weight : s.weight;
}

double lp_value(const Instance& instance, Formulation formulation) {
  const LpOutcome out = solve_lp(build_formulation(instance, formulation));
  if (out.status != LpStatus::kOptimal) {
    throw std::runtime_error("LP not solved to optimality");
  }
  return out.value;
}

}  // namespace exclear::testing
