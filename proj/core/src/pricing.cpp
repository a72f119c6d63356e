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

#include <algorithm>
#include <cmath>
#include <map>

#include "exclear/error.hpp"
#include "exclear/pricing.hpp"

namespace exclear {
namespace {

// Reduction weights delta_j - scale * w_ij over pair-to-pair arcs.
std::vector<WeightedArc> reduced_arcs(const Instance& instance,
                                      const PricingDuals& duals, double scale) {
  std::vector<WeightedArc> out;
  for (const Arc& a : instance.arcs()) {
    if (!instance.is_pair(a.source)) continue;
    out.push_back({a.source, a.target, duals.at(a.target) - scale * a.weight});
  }
  return out;
}

std::vector<PricedCycle> rank(const Instance& instance,
                              const PricingDuals& duals,
                              const std::vector<Cycle>& cycles,
                              std::optional<double> p) {
  std::vector<PricedCycle> out;
  for (const Cycle& c : cycles) {
    const double price = cycle_price(instance, duals, c, p);
    if (price > kPriceEpsilon) out.push_back({c, price});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const PricedCycle& a, const PricedCycle& b) {
                     if (a.price != b.price) return a.price > b.price;
                     return a.cycle < b.cycle;
                   });
  return out;
}

}  // namespace

double cycle_price(const Instance& instance, const PricingDuals& duals,
                   const Cycle& cycle, std::optional<double> p) {
  double dual_sum = 0.0;
  for (const Vertex v : cycle.vertices) dual_sum += duals.at(v);
  const double w = cycle_weight(instance, cycle);
  if (!p) return w - dual_sum;
  return std::pow(*p, cycle.length()) * w - dual_sum;
}

std::vector<PricedCycle> price_cycles_deterministic(
    const Instance& instance, const PricingDuals& duals,
    const CycleFilter& exclude) {
  const std::vector<WeightedArc> arcs = reduced_arcs(instance, duals, 1.0);
  const std::vector<Cycle> cycles =
      find_negative_cycles(instance.num_vertices(), arcs, instance.cycle_cap(),
                           kPriceEpsilon, exclude);
  return rank(instance, duals, cycles, std::nullopt);
}

std::vector<PricedCycle> price_cycles_discounted(
    const Instance& instance, const PricingDuals& duals, double p,
    const CycleFilter& exclude) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kBadProbability, "p must lie in (0, 1]");
  }
  for (const Arc& a : instance.arcs()) {
    if (a.weight < 0.0) {
      throw Error(ErrorCode::kNegativeWeightInput,
                  "discounted pricing needs nonnegative arc weights");
    }
  }
  // A cycle negative at level k has length <= k, so p^|c| >= p^k and its
  // discounted price is at least the negated reduced weight.
  std::vector<Cycle> all;
  for (int k = 2; k <= instance.cycle_cap(); ++k) {
    const std::vector<WeightedArc> arcs =
        reduced_arcs(instance, duals, std::pow(p, k));
    std::vector<Cycle> found = find_negative_cycles(
        instance.num_vertices(), arcs, k, kPriceEpsilon, exclude);
    all.insert(all.end(), found.begin(), found.end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return rank(instance, duals, all, p);
}

}  // namespace exclear
