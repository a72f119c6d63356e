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

#include "exclear/instance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "exclear/error.hpp"

namespace exclear {
namespace {

std::string arc_text(const Arc& arc) {
  return "(" + std::to_string(arc.source) + "," + std::to_string(arc.target) +
         ")";
}

}  // namespace

Instance build_instance(int num_ndds, int num_pairs, std::vector<Arc> arcs,
                        int cycle_cap, int chain_cap,
                        std::optional<double> failure_prob) {
  if (num_ndds < 0 || num_pairs < 0) {
    throw Error(ErrorCode::kBadParameter, "vertex counts must be nonnegative");
  }
  if (cycle_cap < 0 || chain_cap < 0) {
    throw Error(ErrorCode::kBadParameter, "caps must be nonnegative");
  }
  if (failure_prob && !(*failure_prob > 0.0 && *failure_prob <= 1.0)) {
    throw Error(ErrorCode::kBadProbability,
                "failure_prob must lie in (0, 1], got " +
                    std::to_string(*failure_prob));
  }
  const int n = num_ndds + num_pairs;
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    const Arc& arc = arcs[a];
    const std::string where = "arc #" + std::to_string(a) + " " + arc_text(arc);
    if (arc.source < 1 || arc.source > n || arc.target < 1 || arc.target > n) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  where + ": vertex ids must lie in [1, " + std::to_string(n) +
                      "]");
    }
    if (arc.source == arc.target) {
      throw Error(ErrorCode::kLoopArc, where);
    }
    if (arc.target <= num_ndds) {
      throw Error(ErrorCode::kArcIntoNdd, where);
    }
    if (!(arc.weight >= 0.0) || !std::isfinite(arc.weight)) {
      throw Error(ErrorCode::kNegativeWeight, where);
    }
  }
  std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
    return a.source != b.source ? a.source < b.source : a.target < b.target;
  });
  for (std::size_t a = 1; a < arcs.size(); ++a) {
    if (arcs[a].source == arcs[a - 1].source &&
        arcs[a].target == arcs[a - 1].target) {
      throw Error(ErrorCode::kDuplicateArc, arc_text(arcs[a]));
    }
  }

  Instance inst;
  inst.num_ndds_ = num_ndds;
  inst.num_pairs_ = num_pairs;
  inst.cycle_cap_ = cycle_cap;
  inst.chain_cap_ = chain_cap;
  inst.failure_prob_ = failure_prob;
  inst.arcs_ = std::move(arcs);

  inst.out_begin_.assign(n + 2, 0);
  inst.in_begin_.assign(n + 2, 0);
  for (const Arc& arc : inst.arcs_) {
    ++inst.out_begin_[arc.source + 1];
    ++inst.in_begin_[arc.target + 1];
  }
  for (int v = 1; v <= n + 1; ++v) {
    inst.out_begin_[v] += inst.out_begin_[v - 1];
    inst.in_begin_[v] += inst.in_begin_[v - 1];
  }
  inst.in_ids_.resize(inst.arcs_.size());
  std::vector<int> fill(inst.in_begin_.begin(), inst.in_begin_.end());
  // arcs_ is sorted by source, so each in-list comes out sorted by source.
  for (std::size_t a = 0; a < inst.arcs_.size(); ++a) {
    inst.in_ids_[fill[inst.arcs_[a].target]++] = static_cast<int>(a);
  }
  return inst;
}

std::span<const Arc> Instance::out_arcs(Vertex v) const {
  if (v < 1 || v > num_vertices()) return {};
  return std::span<const Arc>(arcs_).subspan(
      out_begin_[v], out_begin_[v + 1] - out_begin_[v]);
}

std::span<const int> Instance::in_arc_ids(Vertex v) const {
  if (v < 1 || v > num_vertices()) return {};
  return std::span<const int>(in_ids_).subspan(in_begin_[v],
                                               in_begin_[v + 1] - in_begin_[v]);
}

std::optional<double> Instance::weight(Vertex source, Vertex target) const {
  const auto out = out_arcs(source);
  const auto it = std::lower_bound(
      out.begin(), out.end(), target,
      [](const Arc& arc, Vertex t) { return arc.target < t; });
  if (it == out.end() || it->target != target) return std::nullopt;
  return it->weight;
}

Instance Instance::with_caps(int cycle_cap, int chain_cap) const {
  return build_instance(num_ndds_, num_pairs_, arcs_, cycle_cap, chain_cap,
                        failure_prob_);
}

Instance Instance::with_failure_prob(std::optional<double> p) const {
  return build_instance(num_ndds_, num_pairs_, arcs_, cycle_cap_, chain_cap_,
                        p);
}

Cycle make_cycle(std::vector<Vertex> vertices) {
  if (!vertices.empty()) {
    std::rotate(vertices.begin(),
                std::min_element(vertices.begin(), vertices.end()),
                vertices.end());
  }
  return Cycle{std::move(vertices)};
}

double cycle_weight(const Instance& instance, const Cycle& cycle) {
  double total = 0.0;
  const std::size_t n = cycle.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    total += instance.weight(cycle.vertices[i], cycle.vertices[(i + 1) % n])
                 .value_or(0.0);
  }
  return total;
}

double chain_weight(const Instance& instance, const Chain& chain) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < chain.vertices.size(); ++i) {
    total += instance.weight(chain.vertices[i], chain.vertices[i + 1])
                 .value_or(0.0);
  }
  return total;
}

double cycle_expected_weight(const Instance& instance, const Cycle& cycle,
                             double p) {
  return std::pow(p, cycle.length()) * cycle_weight(instance, cycle);
}

double chain_expected_weight(const Instance& instance, const Chain& chain,
                             double p) {
  double total = 0.0;
  double reach = 1.0;
  for (std::size_t i = 0; i + 1 < chain.vertices.size(); ++i) {
    reach *= p;
    total += reach * instance.weight(chain.vertices[i], chain.vertices[i + 1])
                         .value_or(0.0);
  }
  return total;
}

Relabeling relabel_by_degree(const Instance& instance) {
  const int n = instance.num_vertices();
  std::vector<Vertex> order;
  order.reserve(instance.num_pairs());
  for (Vertex v = instance.first_pair(); v <= n; ++v) order.push_back(v);
  // stable_sort keeps ascending original ids among equal degrees.
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return instance.in_degree(a) + instance.out_degree(a) >
           instance.in_degree(b) + instance.out_degree(b);
  });

  std::vector<Vertex> new_to_old(n + 1, 0);
  std::vector<Vertex> old_to_new(n + 1, 0);
  for (Vertex v = 1; v <= instance.num_ndds(); ++v) {
    new_to_old[v] = old_to_new[v] = v;
  }
  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    const Vertex fresh = instance.first_pair() + static_cast<Vertex>(idx);
    new_to_old[fresh] = order[idx];
    old_to_new[order[idx]] = fresh;
  }

  std::vector<Arc> arcs;
  arcs.reserve(instance.arcs().size());
  for (const Arc& arc : instance.arcs()) {
    arcs.push_back({old_to_new[arc.source], old_to_new[arc.target], arc.weight});
  }
  return Relabeling{
      build_instance(instance.num_ndds(), instance.num_pairs(), std::move(arcs),
                     instance.cycle_cap(), instance.chain_cap(),
                     instance.failure_prob()),
      std::move(new_to_old)};
}

}  // namespace exclear
