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

#include "naive_pricer.hpp"

#include <cmath>
#include <limits>

namespace exclear::testing {

double independent_price(const Instance& instance, const PricingDuals& duals,
                         const Cycle& cycle, double p) {
  double w = 0.0;
  double d = 0.0;
  const auto& vs = cycle.vertices;
  for (std::size_t t = 0; t < vs.size(); ++t) {
    const Vertex next = vs[(t + 1) % vs.size()];
    for (const Arc& a : instance.arcs()) {
      if (a.source == vs[t] && a.target == next) w += a.weight;
    }
    d += duals.at(vs[t]);
  }
  return std::pow(p, static_cast<double>(vs.size())) * w - d;
}

std::vector<Cycle> naive_discounted_pricing(const Instance& instance,
                                            const PricingDuals& duals, double p) {
  const int n = instance.num_vertices();
  const int K = instance.cycle_cap();
  std::vector<Cycle> out;
  for (Vertex s = instance.first_pair(); s <= n; ++s) {
    // label[v]: the kept path from s to v.
    std::vector<std::vector<Vertex>> label(n + 1);
    label[s] = {s};
    auto score = [&](const std::vector<Vertex>& path) {
      const double scale = std::pow(p, static_cast<double>(path.size()));
      double total = 0.0;
      for (std::size_t t = 1; t < path.size(); ++t) {
        total += duals.at(path[t]) -
                 scale * instance.weight(path[t - 1], path[t]).value_or(0.0);
      }
      return total;
    };
    for (int round = 1; round < K; ++round) {
      auto next = label;
      for (Vertex v = s; v <= n; ++v) {
        if (label[v].size() != static_cast<std::size_t>(round)) continue;
        for (const Arc& a : instance.out_arcs(v)) {
          if (a.target <= s) continue;
          std::vector<Vertex> cand = label[v];
          cand.push_back(a.target);
          if (next[a.target].empty() || score(cand) < score(next[a.target])) {
            next[a.target] = cand;
          }
        }
      }
      label = std::move(next);
    }
    for (Vertex v = s + 1; v <= n; ++v) {
      if (label[v].empty() || !instance.has_arc(v, s)) continue;
      const Cycle c = make_cycle(label[v]);
      if (independent_price(instance, duals, c, p) > kPriceEpsilon) out.push_back(c);
    }
  }
  return out;
}

}  // namespace exclear::testing
