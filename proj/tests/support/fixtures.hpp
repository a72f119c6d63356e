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

#ifndef EXCLEAR_TESTS_SUPPORT_FIXTURES_HPP_
#define EXCLEAR_TESTS_SUPPORT_FIXTURES_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "exclear/formulations.hpp"
#include "exclear/instance.hpp"
#include "exclear/pricing.hpp"
#include "exclear/solver.hpp"

namespace exclear::testing {

// Two NDDs, five pairs, K = L = 3, unit weights. Optimum 5.
Instance figure1();
// Four pairs, no NDDs.
Instance figure2(int cycle_cap = 3);
// Two NDDs, four pairs, K = 3, L = 4. Optimum 4.
Instance figure4();
// Two 4-cycles through vertex 1 plus its short distances, no NDDs.
Instance two_loops(int cycle_cap = 4);

// s, v1..v4 as 1..5. The v1 4-cycle has discounted price p^4; the v2
// 4-cycle is priced negative; (v3, s) is absent.
struct LengthTrap {
  Instance instance;
  PricingDuals duals;
  double p = 0.5;
  Cycle profitable;
};
LengthTrap length_trap(double eta = 100.0, double p = 0.5);

struct RandomSpec {
  int min_ndds = 0;
  int max_ndds = 0;
  int min_pairs = 3;
  int max_pairs = 8;
  int min_cycle_cap = 2;
  int max_cycle_cap = 3;
  int min_chain_cap = 1;
  int max_chain_cap = 3;
  double min_density = 0.15;
  double max_density = 0.4;
  bool integer_weights = true;
  std::optional<double> failure_prob;
};

// Draws sizes and density from `rng`, then generates with a derived seed.
Instance random_instance(std::mt19937_64& rng, const RandomSpec& spec);

// Independent uniform duals in [lo, hi] for every pair vertex.
PricingDuals random_duals(std::mt19937_64& rng, const Instance& instance,
                          double lo, double hi);

// IP optimum via build + branch and bound, with the instance's p applied
// when the formulation allows it.
double mip_value(const Instance& instance, Formulation formulation);
double lp_value(const Instance& instance, Formulation formulation);

}  // namespace exclear::testing

#endif  // EXCLEAR_TESTS_SUPPORT_FIXTURES_HPP_
