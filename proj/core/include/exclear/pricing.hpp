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

#ifndef EXCLEAR_PRICING_HPP_
#define EXCLEAR_PRICING_HPP_

#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "exclear/formulations.hpp"
#include "exclear/instance.hpp"

namespace exclear {

// Prices at or below this are treated as zero.
inline constexpr double kPriceEpsilon = 1e-9;

// Dual value of each pair's capacity row; absent vertices read as zero.
struct PricingDuals {
  std::map<Vertex, double> delta;

  double at(Vertex v) const {
    const auto it = delta.find(v);
    return it == delta.end() ? 0.0 : it->second;
  }
};

struct PricedCycle {
  Cycle cycle;
  double price = 0.0;
};

struct WeightedArc {
  Vertex source = 0;
  Vertex target = 0;
  double weight = 0.0;
};

// Returns true for cycles the search must not report.
using CycleFilter = std::function<bool(const Cycle&)>;

// Elementary cycles of length <= max_length over vertices 1..num_vertices
// whose total weight is below -threshold. A label-correcting sweep runs
// first; when it finds nothing an exact depth-bounded search runs, so the
// result is empty only if no such cycle exists.
std::vector<Cycle> find_negative_cycles(int num_vertices,
                                        std::span<const WeightedArc> arcs,
                                        int max_length, double threshold = 0.0,
                                        const CycleFilter& exclude = {});

// sum over arcs of (w_ij - delta_i), or p^|c| sum w_ij - sum delta_j.
double cycle_price(const Instance& instance, const PricingDuals& duals,
                   const Cycle& cycle, std::optional<double> p = std::nullopt);

// Cycles with price above kPriceEpsilon, best first.
std::vector<PricedCycle> price_cycles_deterministic(
    const Instance& instance, const PricingDuals& duals,
    const CycleFilter& exclude = {});

// Cycles with discounted price above kPriceEpsilon, best first. Throws
// NegativeWeightInput if any arc weight is negative.
std::vector<PricedCycle> price_cycles_discounted(
    const Instance& instance, const PricingDuals& duals, double p,
    const CycleFilter& exclude = {});

enum class InitialColumns { kNone, kGreedy };

struct BnpConfig {
  InitialColumns initial_columns = InitialColumns::kNone;
  std::size_t column_cap = 0;  // 0: unlimited
  long node_limit = 0;         // 0: unlimited
  double time_limit_s = std::numeric_limits<double>::infinity();
};

struct BnpStats {
  std::size_t columns_generated = 0;
  long pricing_calls = 0;
  long nodes = 0;
  double root_bound = std::numeric_limits<double>::quiet_NaN();
};

struct BnpResult {
  Solution solution;
  BnpStats stats;
};

// Branch and price over PICEF: chain-arc variables plus a growing pool of
// cycle columns. Uses expected weights when the instance has p. Throws
// LimitReached when a column, node or time limit stops the search.
BnpResult solve_picef_bnp(const Instance& instance, const BnpConfig& config = {});

}  // namespace exclear

#endif  // EXCLEAR_PRICING_HPP_
