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

#ifndef EXCLEAR_FORMULATIONS_HPP_
#define EXCLEAR_FORMULATIONS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "exclear/index_sets.hpp"
#include "exclear/instance.hpp"
#include "exclear/mip_model.hpp"

namespace exclear {

// A vertex-disjoint packing of cycles and chains.
struct Solution {
  std::vector<Cycle> cycles;
  std::vector<Chain> chains;
  double weight = 0.0;
  // Set whenever the instance carries a success probability.
  std::optional<double> expected_weight;
};

// Sorts the structures and fills in both weights.
Solution make_solution(const Instance& instance, std::vector<Cycle> cycles,
                       std::vector<Chain> chains);

// Throws InfeasibleAssignment unless every structure uses existing arcs,
// respects its cap and touches no vertex used by another structure.
void verify_solution(const Instance& instance, const Solution& solution);

struct BuildOptions {
  // Enumerated cycle/chain columns plus arc variables may not exceed this.
  std::size_t variable_budget = 5'000'000;
};

// One z_c per cycle (<= K) and chain (<= L); every vertex in at most one.
MipModel build_cf(const Instance& instance, const BuildOptions& options = {});

// Position-indexed edge formulation over graph copies. Requires an instance
// without NDDs; the kReduced2 variant requires K >= 3.
MipModel build_pief(const Instance& instance, PiefVariant variant,
                    const BuildOptions& options = {});

// Objective coefficient of x^l_{ijk} in the kReduced2 model: the arc's own
// weight plus the weight of the implicit first arc (l,i) when k = 2 and of
// the implicit closing arc (j,l) when k = K-1 and j != l. Throws
// PositionOutOfSet unless k is in the kReduced2 position set.
double adjusted_weight(const Instance& instance, Vertex i, Vertex j, int k,
                       Vertex l);

// Position-indexed chain arcs plus one z_c per cycle.
MipModel build_picef(const Instance& instance, bool reduced,
                     const BuildOptions& options = {});

// The PICEF rows and chain-arc variables with no cycle columns, keeping a
// capacity row for every pair vertex so columns can be added later.
MipModel build_picef_master(const Instance& instance, bool reduced);

// PIEF cycle variables over copies of the pair subgraph plus PICEF chain
// variables, sharing one capacity row per pair.
MipModel build_hpief(const Instance& instance,
                     PiefVariant variant = PiefVariant::kFull);

// Dispatches on the formulation; kCustom raises BadParameter.
MipModel build_formulation(const Instance& instance, Formulation formulation,
                           const BuildOptions& options = {});

// Inverse of formulation_name.
std::optional<Formulation> parse_formulation(std::string_view name);

// Rewrites the objective to expected weight under the instance's success
// probability p: p^k w_ij on chain arcs at position k, p^|c| w_c on cycles.
// Supported for PICEF (both variants) and CF; HPIEF and PIEF raise
// Unsupported.
MipModel apply_failure_objective(const MipModel& model,
                                 const Instance& instance);

// Rebuilds the packing encoded by an integral, feasible assignment and checks
// it against the instance and the model objective. Throws InfeasibleAssignment
// on any mismatch.
Solution decode_solution(const MipModel& model,
                         std::span<const double> assignment,
                         const Instance& instance);

}  // namespace exclear

#endif  // EXCLEAR_FORMULATIONS_HPP_
