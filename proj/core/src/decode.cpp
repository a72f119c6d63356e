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

#include <cmath>
#include <map>
#include <string>

#include "exclear/error.hpp"
#include "exclear/formulations.hpp"

namespace exclear {
namespace {

constexpr double kIntegralityTol = 1e-6;
constexpr double kFeasibilityTol = 1e-6;

[[noreturn]] void infeasible(const std::string& why) {
  throw Error(ErrorCode::kInfeasibleAssignment, why);
}

bool uses_implicit_ends(Formulation f) {
  return f == Formulation::kPiefReduced2 || f == Formulation::kHpiefReduced2;
}

// Selected position arcs keyed by (source, position), per graph copy or for
// chains (copy 0).
using PositionArcs = std::map<std::pair<Vertex, int>, std::vector<int>>;

int take_unique(PositionArcs& arcs, Vertex v, int k, const char* what) {
  const auto it = arcs.find({v, k});
  if (it == arcs.end() || it->second.empty()) return -1;
  if (it->second.size() > 1) {
    infeasible(std::string(what) + ": two arcs leave vertex " +
               std::to_string(v) + " at position " + std::to_string(k));
  }
  const int id = it->second.front();
  arcs.erase(it);
  return id;
}

}  // namespace

Solution decode_solution(const MipModel& model,
                         std::span<const double> assignment,
                         const Instance& instance) {
  if (static_cast<int>(assignment.size()) != model.num_variables()) {
    infeasible("assignment has " + std::to_string(assignment.size()) +
               " entries for " + std::to_string(model.num_variables()) +
               " variables");
  }
  for (int v = 0; v < model.num_variables(); ++v) {
    const double x = assignment[v];
    if (model.variable(v).integral &&
        std::fabs(x - std::round(x)) > kIntegralityTol) {
      infeasible(model.variable_name(v) + " = " + std::to_string(x) +
                 " is fractional");
    }
  }
  const double violation = model.max_violation(assignment);
  if (violation > kFeasibilityTol) {
    infeasible("assignment violates the model by " + std::to_string(violation));
  }

  std::vector<Cycle> cycles;
  std::vector<Chain> chains;
  std::map<Vertex, PositionArcs> copy_arcs;
  PositionArcs chain_arcs;
  for (int v = 0; v < model.num_variables(); ++v) {
    if (assignment[v] < 0.5) continue;
    const VarTag& tag = model.variable(v).tag;
    switch (tag.kind) {
      case VarKind::kStructureZ: {
        const Structure& s = model.structures().at(tag.structure);
        if (s.is_chain) {
          chains.push_back(Chain{s.vertices});
        } else {
          cycles.push_back(make_cycle(s.vertices));
        }
        break;
      }
      case VarKind::kPicefY:
        chain_arcs[{tag.i, tag.k}].push_back(v);
        break;
      case VarKind::kPiefX:
        copy_arcs[tag.l][{tag.i, tag.k}].push_back(v);
        break;
      case VarKind::kFree:
        infeasible("untagged variable " + model.variable_name(v) +
                   " is selected");
    }
  }

  // Chains: walk forward from every NDD through positions 1, 2, ...
  for (Vertex ndd = 1; ndd <= instance.num_ndds(); ++ndd) {
    int id = take_unique(chain_arcs, ndd, 1, "chain");
    if (id < 0) continue;
    Chain chain{{ndd}};
    int k = 1;
    while (id >= 0) {
      const Vertex next = model.variable(id).tag.j;
      chain.vertices.push_back(next);
      id = take_unique(chain_arcs, next, ++k, "chain");
    }
    chains.push_back(std::move(chain));
  }
  for (const auto& [key, ids] : chain_arcs) {
    if (!ids.empty()) {
      infeasible(model.variable_name(ids.front()) +
                 " is not reachable from any NDD");
    }
  }

  // Cycles: in copy l follow positions from the arc leaving l.
  const bool implicit = uses_implicit_ends(model.formulation());
  const int cap = model.cycle_cap();
  for (auto& [root, arcs] : copy_arcs) {
    const int start_k = implicit ? 2 : 1;
    // With implicit ends the first explicit arc is (i, j) at position 2 and
    // the arc (root, i) is implied; otherwise it leaves the root at 1.
    int id = -1;
    if (implicit) {
      std::vector<int> starts;
      for (auto it = arcs.begin(); it != arcs.end();) {
        if (it->first.second == 2) {
          starts.insert(starts.end(), it->second.begin(), it->second.end());
          it = arcs.erase(it);
        } else {
          ++it;
        }
      }
      if (starts.size() > 1) {
        infeasible("copy " + std::to_string(root) +
                   " selects several arcs at position 2");
      }
      if (!starts.empty()) id = starts.front();
    } else {
      id = take_unique(arcs, root, 1, "cycle");
    }
    if (id < 0) {
      if (!arcs.empty()) {
        infeasible("copy " + std::to_string(root) +
                   " has selected arcs but no cycle start");
      }
      continue;
    }

    Cycle cycle{{root}};
    if (implicit) cycle.vertices.push_back(model.variable(id).tag.i);
    int k = start_k;
    while (true) {
      const Vertex next = model.variable(id).tag.j;
      if (next == root) break;
      cycle.vertices.push_back(next);
      if (implicit && k == cap - 1) break;  // closing arc (next, root) implied
      if (static_cast<int>(cycle.vertices.size()) > cap) {
        infeasible("copy " + std::to_string(root) + " exceeds the cycle cap");
      }
      id = take_unique(arcs, next, ++k, "cycle");
      if (id < 0) {
        infeasible("copy " + std::to_string(root) + " cycle breaks at vertex " +
                   std::to_string(next));
      }
    }
    for (const auto& [key, ids] : arcs) {
      if (!ids.empty()) {
        infeasible(model.variable_name(ids.front()) +
                   " is selected but not on the copy's cycle");
      }
    }
    cycles.push_back(make_cycle(std::move(cycle.vertices)));
  }

  Solution solution =
      make_solution(instance, std::move(cycles), std::move(chains));
  verify_solution(instance, solution);

  const double objective = model.objective_value(assignment);
  double expected = solution.weight;
  if (model.discount()) {
    const Instance scored = instance.with_failure_prob(*model.discount());
    expected = make_solution(scored, solution.cycles, solution.chains)
                   .expected_weight.value_or(0.0);
  }
  if (std::fabs(objective - expected) > 1e-6 * (1.0 + std::fabs(objective))) {
    infeasible("model objective " + std::to_string(objective) +
               " disagrees with the decoded packing's value " +
               std::to_string(expected));
  }
  return solution;
}

}  // namespace exclear
