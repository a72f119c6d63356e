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
#include "formulation_blocks.hpp"

namespace exclear {
namespace detail {

void add_chain_position_block(const Instance& instance, bool reduced,
                              MipModel& model, CapacityTerms& capacity) {
  const int cap = instance.chain_cap();
  const std::vector<int> dist = ndd_distances(instance);
  std::map<std::pair<Vertex, int>, std::vector<int>> entering;
  std::map<std::pair<Vertex, int>, std::vector<int>> leaving;

  for (const Arc& arc : instance.arcs()) {
    for (const int k :
         picef_positions(instance, arc.source, arc.target, reduced, &dist)) {
      Variable var;
      var.tag = {VarKind::kPicefY, arc.source, arc.target, k, 0, -1};
      var.objective = arc.weight;
      const int id = model.add_variable(var);
      entering[{arc.target, k}].push_back(id);
      leaving[{arc.source, k}].push_back(id);
      capacity[arc.target].push_back({id, 1.0});
    }
  }

  for (Vertex ndd = 1; ndd <= instance.num_ndds(); ++ndd) {
    const auto out = leaving.find({ndd, 1});
    if (out == leaving.end()) continue;
    Constraint row;
    row.tag = {RowKind::kNddCapacity, ndd, 1, 0};
    for (const int id : out->second) row.terms.push_back({id, 1.0});
    row.rhs = 1.0;
    model.add_constraint(std::move(row));
  }

  // An arc may leave i at position k+1 only if a chain arc enters i at k.
  for (Vertex i = instance.first_pair(); i <= instance.num_vertices(); ++i) {
    for (int k = 1; k < cap; ++k) {
      const auto out = leaving.find({i, k + 1});
      if (out == leaving.end()) continue;
      Constraint row;
      row.tag = {RowKind::kChainFlow, i, k, 0};
      row.sense = Sense::kLessEqual;
      for (const int id : out->second) row.terms.push_back({id, 1.0});
      const auto in = entering.find({i, k});
      if (in != entering.end()) {
        for (const int id : in->second) row.terms.push_back({id, -1.0});
      }
      model.add_constraint(std::move(row));
    }
  }
}

}  // namespace detail

namespace {

MipModel picef_arcs_only(const Instance& instance, bool reduced,
                         detail::CapacityTerms& capacity) {
  MipModel model(reduced ? Formulation::kPicefReduced : Formulation::kPicef,
                 instance.cycle_cap(), instance.chain_cap());
  detail::add_chain_position_block(instance, reduced, model, capacity);
  return model;
}

}  // namespace

MipModel build_picef(const Instance& instance, bool reduced,
                     const BuildOptions& options) {
  detail::CapacityTerms capacity(instance.num_vertices() + 1);
  MipModel model = picef_arcs_only(instance, reduced, capacity);
  const std::size_t arc_vars = static_cast<std::size_t>(model.num_variables());
  if (arc_vars > options.variable_budget) {
    throw Error(ErrorCode::kModelTooLarge,
                std::to_string(arc_vars) + " chain-arc variables");
  }
  for (const Cycle& c :
       enumerate_cycles(instance, options.variable_budget - arc_vars)) {
    Variable var;
    var.objective = cycle_weight(instance, c);
    var.tag.kind = VarKind::kStructureZ;
    var.tag.structure = model.add_structure({false, c.vertices});
    const int id = model.add_variable(var);
    for (const Vertex v : c.vertices) capacity[v].push_back({id, 1.0});
  }
  detail::add_capacity_rows(model, capacity, instance.first_pair(),
                            instance.num_vertices());
  return model;
}

MipModel build_picef_master(const Instance& instance, bool reduced) {
  detail::CapacityTerms capacity(instance.num_vertices() + 1);
  MipModel model = picef_arcs_only(instance, reduced, capacity);
  detail::add_capacity_rows(model, capacity, instance.first_pair(),
                            instance.num_vertices(), /*keep_empty=*/true);
  return model;
}

MipModel apply_failure_objective(const MipModel& model,
                                 const Instance& instance) {
  const auto& p = instance.failure_prob();
  if (!p || !(*p > 0.0 && *p <= 1.0)) {
    throw Error(ErrorCode::kBadProbability,
                "failure-aware objective needs a success probability in (0, 1]");
  }
  switch (model.formulation()) {
    case Formulation::kPicef:
    case Formulation::kPicefReduced:
    case Formulation::kCf:
      break;
    default:
      throw Error(ErrorCode::kUnsupported,
                  "failure-aware objective is available for picef, "
                  "picef-red and cf only, not " +
                      formulation_name(model.formulation()));
  }

  MipModel out = model;
  for (int v = 0; v < out.num_variables(); ++v) {
    const VarTag& tag = out.variable(v).tag;
    switch (tag.kind) {
      case VarKind::kPicefY:
        out.set_objective(
            v, std::pow(*p, tag.k) * instance.weight(tag.i, tag.j).value_or(0));
        break;
      case VarKind::kStructureZ: {
        const Structure& s = out.structures().at(tag.structure);
        out.set_objective(
            v, s.is_chain
                   ? chain_expected_weight(instance, Chain{s.vertices}, *p)
                   : cycle_expected_weight(instance, Cycle{s.vertices}, *p));
        break;
      }
      default:
        break;
    }
  }
  out.set_discount(*p);
  return out;
}

}  // namespace exclear
