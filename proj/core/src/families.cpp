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
#include <string>

#include "exclear/error.hpp"
#include "exclear/harness.hpp"

namespace exclear {
namespace {

Instance two_arm() {
  const std::vector<Arc> arcs = {{1, 2, 1.0}, {2, 3, 1.0}, {3, 4, 1.0},
                                 {1, 5, 1.0}, {5, 6, 1.0}, {6, 7, 1.0},
                                 {7, 5, 1.0}};
  return build_instance(1, 6, arcs, 2, 4);
}

// NDD 1, spine s_1..s_{m+1} at 2..m+2, then K-1 private vertices per gadget.
// Gadget i is the (K+1)-cycle s_i -> s_{i+1} -> u_1 .. u_{K-1} -> s_i.
Instance udders(int K, int L) {
  const int m = L - K;
  const int spine = m + 1;
  const int pairs = spine + m * (K - 1);
  std::vector<Arc> arcs;
  arcs.push_back({1, 2, 1.0});
  Vertex next = 2 + spine;
  for (int i = 1; i <= m; ++i) {
    const Vertex s = 1 + i;
    arcs.push_back({s, s + 1, 1.0});
    Vertex prev = s + 1;
    for (int t = 0; t < K - 1; ++t) {
      arcs.push_back({prev, next, 1.0});
      prev = next++;
    }
    arcs.push_back({prev, s, 1.0});
  }
  return build_instance(1, pairs, arcs, K, L);
}

}  // namespace

Instance make_family(const FamilyParams& params) {
  switch (params.family) {
    case Family::kTwoArm:
      return two_arm();
    case Family::kUdders:
      if (params.cycle_cap < 2 || params.chain_cap < params.cycle_cap + 2) {
        throw Error(ErrorCode::kBadFamilyParams,
                    "udders needs K >= 2 and L >= K + 2, got K=" +
                        std::to_string(params.cycle_cap) +
                        " L=" + std::to_string(params.chain_cap));
      }
      return udders(params.cycle_cap, params.chain_cap);
  }
  throw Error(ErrorCode::kBadFamilyParams, "unknown family");
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "two-arm") return Family::kTwoArm;
  if (name == "udders") return Family::kUdders;
  return std::nullopt;
}

std::vector<Cycle> decompose_closed_walk(const std::vector<WalkArc>& walk) {
  if (walk.empty()) throw Error(ErrorCode::kNotAClosedWalk, "empty walk");
  for (std::size_t t = 0; t < walk.size(); ++t) {
    const WalkArc& next = walk[(t + 1) % walk.size()];
    if (walk[t].second != next.first) {
      throw Error(ErrorCode::kNotAClosedWalk,
                  "arc " + std::to_string(t) + " ends at " +
                      std::to_string(walk[t].second) + " but the next starts at " +
                      std::to_string(next.first));
    }
  }
  std::vector<Cycle> out;
  std::vector<Vertex> stack = {walk.front().first};
  for (const WalkArc& arc : walk) {
    const Vertex u = arc.second;
    const auto it = std::find(stack.begin(), stack.end(), u);
    if (it == stack.end()) {
      stack.push_back(u);
      continue;
    }
    out.push_back(make_cycle(std::vector<Vertex>(it, stack.end())));
    stack.erase(it + 1, stack.end());
  }
  return out;
}

}  // namespace exclear
