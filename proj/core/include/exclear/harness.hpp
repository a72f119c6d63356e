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

#ifndef EXCLEAR_HARNESS_HPP_
#define EXCLEAR_HARNESS_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exclear/formulations.hpp"
#include "exclear/instance.hpp"
#include "exclear/mip_model.hpp"
#include "exclear/pricing.hpp"

namespace exclear {

struct OracleLimits {
  std::size_t max_structures = 100000;
  int max_vertices = 64;
};

// Exhaustive packing search with its own cycle/chain enumeration and weight
// evaluation. Maximises expected weight when the instance has p. Throws
// TooLargeForOracle past the limits.
Solution brute_force_optimum(const Instance& instance,
                             const OracleLimits& limits = {});

// Best cycle by price over the full cycle list, or none if no price exceeds
// kPriceEpsilon.
std::optional<PricedCycle> brute_force_pricing(
    const Instance& instance, const PricingDuals& duals,
    std::optional<double> p = std::nullopt, const OracleLimits& limits = {});

enum class Family { kTwoArm, kUdders };

struct FamilyParams {
  Family family = Family::kTwoArm;
  int cycle_cap = 2;  // ignored by the two-arm graph, which fixes K = 2
  int chain_cap = 4;  // ignored by the two-arm graph, which fixes L = 4
};

// two-arm: one NDD feeding a three-arc path and a path into a 3-cycle.
// udders: one NDD feeding a spine of (K+1)-cycles, each sharing an arc with
// the next; requires K >= 2 and L >= K + 2.
Instance make_family(const FamilyParams& params);

std::optional<Family> parse_family(std::string_view name);

struct LprGap {
  Formulation a;
  Formulation b;
  double gap = 0.0;  // LPR(a) - LPR(b)
};

struct LprComparison {
  std::map<Formulation, double> values;
  std::vector<LprGap> gaps;
};

LprComparison compare_lprs(const Instance& instance,
                           const std::vector<Formulation>& formulations);

using WalkArc = std::pair<Vertex, Vertex>;

// Splits a closed walk into elementary cycles by repeatedly cutting out the
// segment between a vertex and its first repeat. Throws NotAClosedWalk.
std::vector<Cycle> decompose_closed_walk(const std::vector<WalkArc>& walk);

}  // namespace exclear

#endif  // EXCLEAR_HARNESS_HPP_
