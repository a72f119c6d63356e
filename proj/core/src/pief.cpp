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
#include <map>
#include <string>

#include "exclear/error.hpp"
#include "exclear/formulations.hpp"
#include "formulation_blocks.hpp"

namespace exclear {
namespace detail {

double adjusted_weight_unchecked(const Instance& instance, Vertex i, Vertex j,
                                 int k, Vertex l) {
  double w = instance.weight(i, j).value_or(0.0);
  if (k == 2) w += instance.weight(l, i).value_or(0.0);
  if (k == instance.cycle_cap() - 1 && j != l) {
    w += instance.weight(j, l).value_or(0.0);
  }
  return w;
}

void add_cycle_position_block(const Instance& instance, PiefVariant variant,
                              MipModel& model, CapacityTerms& capacity) {
  const int cap = instance.cycle_cap();
  const int n = instance.num_vertices();
  const bool implicit_ends = variant == PiefVariant::kReduced2;

  for (Vertex l = instance.first_pair(); l <= n; ++l) {
    CopyDistances dist;
    if (variant != PiefVariant::kFull) dist = copy_distances(instance, l);

    // (vertex, position) -> variables entering / leaving it in this copy.
    std::map<std::pair<Vertex, int>, std::vector<int>> entering;
    std::map<std::pair<Vertex, int>, std::vector<int>> leaving;

    for (Vertex i = l; i <= n; ++i) {
      for (const Arc& arc : instance.out_arcs(i)) {
        const Vertex j = arc.target;
        if (j < l) continue;
        for (const int k : pief_positions(instance, i, j, l, variant, &dist)) {
          Variable var;
          var.tag = {VarKind::kPiefX, i, j, k, l, -1};
          var.objective = implicit_ends
                              ? adjusted_weight_unchecked(instance, i, j, k, l)
                              : arc.weight;
          const int id = model.add_variable(var);
          entering[{j, k}].push_back(id);
          leaving[{i, k}].push_back(id);
          capacity[j].push_back({id, 1.0});
          if (implicit_ends) {
            // The implicit arc (l,i) enters i; the implicit arc (j,l)
            // enters the copy root.
            if (k == 2) capacity[i].push_back({id, 1.0});
            if (k == cap - 1 && j != l) capacity[l].push_back({id, 1.0});
          }
        }
      }
    }

    const int k_first = implicit_ends ? 2 : 1;
    const int k_last = implicit_ends ? cap - 2 : cap - 1;
    for (Vertex i = l + 1; i <= n; ++i) {
      for (int k = k_first; k <= k_last; ++k) {
        const auto in = entering.find({i, k});
        const auto out = leaving.find({i, k + 1});
        if (in == entering.end() && out == leaving.end()) continue;
        Constraint row;
        row.tag = {RowKind::kCycleFlow, i, k, l};
        row.sense = Sense::kEqual;
        if (in != entering.end()) {
          for (const int id : in->second) row.terms.push_back({id, 1.0});
        }
        if (out != leaving.end()) {
          for (const int id : out->second) row.terms.push_back({id, -1.0});
        }
        model.add_constraint(std::move(row));
      }
    }
  }
}

void add_capacity_rows(MipModel& model, const CapacityTerms& capacity,
                       Vertex first, Vertex last, bool keep_empty) {
  for (Vertex v = first; v <= last; ++v) {
    if (capacity[v].empty() && !keep_empty) continue;
    Constraint row;
    row.tag = {RowKind::kVertexCapacity, v, 0, 0};
    row.terms = capacity[v];
    row.rhs = 1.0;
    model.add_constraint(std::move(row));
  }
}

}  // namespace detail

MipModel build_cf(const Instance& instance, const BuildOptions& options) {
  MipModel model(Formulation::kCf, instance.cycle_cap(), instance.chain_cap());
  const std::size_t budget = options.variable_budget;
  std::vector<Cycle> cycles = enumerate_cycles(instance, budget);
  std::vector<Chain> chains =
      enumerate_chains(instance, budget - std::min(budget, cycles.size()));

  detail::CapacityTerms capacity(instance.num_vertices() + 1);
  for (Cycle& c : cycles) {
    Variable var;
    var.objective = cycle_weight(instance, c);
    var.tag.kind = VarKind::kStructureZ;
    var.tag.structure = model.add_structure({false, c.vertices});
    const int id = model.add_variable(var);
    for (const Vertex v : c.vertices) capacity[v].push_back({id, 1.0});
  }
  for (Chain& c : chains) {
    Variable var;
    var.objective = chain_weight(instance, c);
    var.tag.kind = VarKind::kStructureZ;
    var.tag.structure = model.add_structure({true, c.vertices});
    const int id = model.add_variable(var);
    for (const Vertex v : c.vertices) capacity[v].push_back({id, 1.0});
  }
  detail::add_capacity_rows(model, capacity, 1, instance.num_vertices());
  return model;
}

MipModel build_pief(const Instance& instance, PiefVariant variant,
                    const BuildOptions& options) {
  if (instance.num_ndds() > 0) {
    throw Error(ErrorCode::kNddsPresent,
                "PIEF models cycles only; use HPIEF or PICEF with NDDs");
  }
  if (variant == PiefVariant::kReduced2 && instance.cycle_cap() < 3) {
    throw Error(ErrorCode::kCapTooSmallForReduced2,
                "eliminating positions 1 and K needs K >= 3");
  }
  const Formulation kind = variant == PiefVariant::kFull ? Formulation::kPief
                           : variant == PiefVariant::kReduced
                               ? Formulation::kPiefReduced
                               : Formulation::kPiefReduced2;
  MipModel model(kind, instance.cycle_cap(), instance.chain_cap());
  detail::CapacityTerms capacity(instance.num_vertices() + 1);
  detail::add_cycle_position_block(instance, variant, model, capacity);
  if (static_cast<std::size_t>(model.num_variables()) >
      options.variable_budget) {
    throw Error(ErrorCode::kModelTooLarge,
                std::to_string(model.num_variables()) + " variables");
  }
  detail::add_capacity_rows(model, capacity, 1, instance.num_vertices());
  return model;
}

double adjusted_weight(const Instance& instance, Vertex i, Vertex j, int k,
                       Vertex l) {
  if (instance.cycle_cap() < 3) {
    throw Error(ErrorCode::kPositionOutOfSet, "adjusted weights need K >= 3");
  }
  const auto positions =
      pief_positions(instance, i, j, l, PiefVariant::kReduced2);
  if (!std::binary_search(positions.begin(), positions.end(), k)) {
    throw Error(ErrorCode::kPositionOutOfSet,
                "position " + std::to_string(k) + " is not available to arc (" +
                    std::to_string(i) + "," + std::to_string(j) +
                    ") in copy " + std::to_string(l));
  }
  return detail::adjusted_weight_unchecked(instance, i, j, k, l);
}

MipModel build_hpief(const Instance& instance, PiefVariant variant) {
  if (variant == PiefVariant::kReduced2 && instance.cycle_cap() < 3) {
    throw Error(ErrorCode::kCapTooSmallForReduced2,
                "eliminating positions 1 and K needs K >= 3");
  }
  const Formulation kind = variant == PiefVariant::kFull ? Formulation::kHpief
                           : variant == PiefVariant::kReduced
                               ? Formulation::kHpiefReduced
                               : Formulation::kHpiefReduced2;
  MipModel model(kind, instance.cycle_cap(), instance.chain_cap());
  detail::CapacityTerms capacity(instance.num_vertices() + 1);
  detail::add_cycle_position_block(instance, variant, model, capacity);
  detail::add_chain_position_block(instance, false, model, capacity);
  detail::add_capacity_rows(model, capacity, instance.first_pair(),
                            instance.num_vertices());
  return model;
}

}  // namespace exclear
