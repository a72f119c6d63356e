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
#include "exclear/formulations.hpp"

namespace exclear {
namespace {

[[noreturn]] void infeasible(const std::string& why) {
  throw Error(ErrorCode::kInfeasibleAssignment, why);
}

std::string describe(const std::vector<Vertex>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += "->";
    out += std::to_string(vs[i]);
  }
  return out;
}

}  // namespace

Solution make_solution(const Instance& instance, std::vector<Cycle> cycles,
                       std::vector<Chain> chains) {
  std::sort(cycles.begin(), cycles.end());
  std::sort(chains.begin(), chains.end());
  Solution s;
  s.cycles = std::move(cycles);
  s.chains = std::move(chains);
  double expected = 0.0;
  const auto p = instance.failure_prob();
  for (const Cycle& c : s.cycles) {
    s.weight += cycle_weight(instance, c);
    if (p) expected += cycle_expected_weight(instance, c, *p);
  }
  for (const Chain& c : s.chains) {
    s.weight += chain_weight(instance, c);
    if (p) expected += chain_expected_weight(instance, c, *p);
  }
  if (p) s.expected_weight = expected;
  return s;
}

void verify_solution(const Instance& instance, const Solution& solution) {
  std::vector<bool> used(instance.num_vertices() + 1, false);
  const auto claim = [&](Vertex v, const std::vector<Vertex>& owner) {
    if (v < 1 || v > instance.num_vertices()) {
      infeasible("vertex " + std::to_string(v) + " out of range in " +
                 describe(owner));
    }
    if (used[v]) {
      infeasible("vertex " + std::to_string(v) + " used twice (" +
                 describe(owner) + ")");
    }
    used[v] = true;
  };

  for (const Cycle& c : solution.cycles) {
    if (c.length() < 2 || c.length() > instance.cycle_cap()) {
      infeasible("cycle " + describe(c.vertices) + " violates the cycle cap");
    }
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
      const Vertex v = c.vertices[i];
      claim(v, c.vertices);
      if (!instance.is_pair(v)) {
        infeasible("cycle " + describe(c.vertices) + " visits an NDD");
      }
      if (!instance.has_arc(v, c.vertices[(i + 1) % c.vertices.size()])) {
        infeasible("cycle " + describe(c.vertices) + " uses a missing arc");
      }
    }
  }
  for (const Chain& c : solution.chains) {
    if (c.length() < 1 || c.length() > instance.chain_cap()) {
      infeasible("chain " + describe(c.vertices) + " violates the chain cap");
    }
    if (!instance.is_ndd(c.vertices.front())) {
      infeasible("chain " + describe(c.vertices) + " does not start at an NDD");
    }
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
      claim(c.vertices[i], c.vertices);
      if (i > 0 && !instance.is_pair(c.vertices[i])) {
        infeasible("chain " + describe(c.vertices) + " revisits an NDD");
      }
      if (i + 1 < c.vertices.size() &&
          !instance.has_arc(c.vertices[i], c.vertices[i + 1])) {
        infeasible("chain " + describe(c.vertices) + " uses a missing arc");
      }
    }
  }
}

}  // namespace exclear
