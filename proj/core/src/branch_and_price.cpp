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
#include <chrono>
#include <cmath>
#include <set>
#include <vector>

#include "exclear/error.hpp"
#include "exclear/formulations.hpp"
#include "exclear/pricing.hpp"
#include "exclear/solver.hpp"

namespace exclear {
namespace {

constexpr double kIntegralityTol = 1e-6;

struct Fixing {
  int var;
  double value;
};

class BranchAndPrice {
 public:
  BranchAndPrice(const Instance& instance, const BnpConfig& config)
      : instance_(instance),
        config_(config),
        master_(build_picef_master(instance, /*reduced=*/false)),
        start_(std::chrono::steady_clock::now()) {
    if (instance.failure_prob()) {
      master_ = apply_failure_objective(master_, instance);
    }
    capacity_row_.assign(instance.num_vertices() + 1, -1);
    for (int r = 0; r < master_.num_constraints(); ++r) {
      const RowTag& tag = master_.constraint(r).tag;
      if (tag.kind == RowKind::kVertexCapacity) capacity_row_[tag.vertex] = r;
    }
    num_arc_vars_ = master_.num_variables();
  }

  BnpResult run() {
    if (config_.initial_columns == InitialColumns::kGreedy) seed_greedy();

    std::vector<std::vector<Fixing>> stack;
    stack.emplace_back();
    while (!stack.empty()) {
      check_limits();
      std::vector<Fixing> fixings = std::move(stack.back());
      stack.pop_back();
      ++stats_.nodes;

      LpOutcome lp;
      if (!price_node(fixings, lp)) continue;
      if (stats_.nodes == 1) stats_.root_bound = lp.value;
      if (has_incumbent_ &&
          lp.value <= incumbent_value_ + 1e-6 * (1.0 + std::fabs(incumbent_value_))) {
        continue;
      }

      const int branch = pick_branch_variable(lp.primal);
      if (branch < 0) {
        accept(lp.primal);
        continue;
      }
      std::vector<Fixing> zero = fixings;
      zero.push_back({branch, 0.0});
      fixings.push_back({branch, 1.0});
      stack.push_back(std::move(zero));
      stack.push_back(std::move(fixings));
    }
    if (!has_incumbent_) {
      // The empty packing is always feasible, so this only happens if the
      // LP solver failed to report it.
      throw Error(ErrorCode::kNumericalFailure, "branch and price found no packing");
    }
    incumbent_.resize(master_.num_variables(), 0.0);
    BnpResult out;
    out.solution = decode_solution(master_, incumbent_, instance_);
    out.stats = stats_;
    return out;
  }

 private:
  void check_limits() const {
    if (config_.node_limit > 0 && stats_.nodes >= config_.node_limit) {
      throw Error(ErrorCode::kLimitReached,
                  "branch and price node limit " +
                      std::to_string(config_.node_limit) + " reached");
    }
    if (std::isfinite(config_.time_limit_s)) {
      const std::chrono::duration<double> elapsed =
          std::chrono::steady_clock::now() - start_;
      if (elapsed.count() >= config_.time_limit_s) {
        throw Error(ErrorCode::kLimitReached, "branch and price time limit reached");
      }
    }
  }

  void add_column(const Cycle& cycle) {
    if (config_.column_cap > 0 && pool_.size() >= config_.column_cap) {
      throw Error(ErrorCode::kLimitReached,
                  "column cap " + std::to_string(config_.column_cap) + " reached");
    }
    Variable var;
    var.tag.kind = VarKind::kStructureZ;
    var.tag.structure = master_.add_structure({false, cycle.vertices});
    const auto& p = instance_.failure_prob();
    var.objective = p ? cycle_expected_weight(instance_, cycle, *p)
                      : cycle_weight(instance_, cycle);
    const int id = master_.add_variable(var);
    for (const Vertex v : cycle.vertices) master_.add_term(capacity_row_[v], id, 1.0);
    pool_.insert(cycle);
    ++stats_.columns_generated;
  }

  void seed_greedy() {
    std::vector<PricedCycle> candidates =
        price_cycles_deterministic(instance_, PricingDuals{});
    std::vector<char> used(instance_.num_vertices() + 1, 0);
    for (const PricedCycle& pc : candidates) {
      const auto& vs = pc.cycle.vertices;
      if (std::any_of(vs.begin(), vs.end(), [&](Vertex v) { return used[v]; })) {
        continue;
      }
      for (const Vertex v : vs) used[v] = 1;
      add_column(pc.cycle);
    }
  }

  // Column generation at one node. Returns false when the node LP is
  // infeasible.
  bool price_node(const std::vector<Fixing>& fixings, LpOutcome& lp) {
    while (true) {
      check_limits();
      LpOptions options;
      const int n = master_.num_variables();
      options.lower.assign(n, 0.0);
      options.upper.assign(n, 1.0);
      for (const Fixing& f : fixings) {
        options.lower[f.var] = f.value;
        options.upper[f.var] = f.value;
      }
      lp = solve_lp(master_, options);
      if (lp.status == LpStatus::kInfeasible) return false;
      if (lp.status != LpStatus::kOptimal) {
        throw Error(ErrorCode::kNumericalFailure, "master LP is unbounded");
      }

      PricingDuals duals;
      for (Vertex v = instance_.first_pair(); v <= instance_.num_vertices(); ++v) {
        const int r = capacity_row_[v];
        if (r >= 0) duals.delta[v] = lp.duals[r];
      }
      const std::vector<char> forced = forced_vertices(fixings);
      const CycleFilter exclude = [&](const Cycle& c) {
        if (pool_.count(c)) return true;
        return std::any_of(c.vertices.begin(), c.vertices.end(),
                           [&](Vertex v) { return forced[v] != 0; });
      };
      ++stats_.pricing_calls;
      const auto& p = instance_.failure_prob();
      const std::vector<PricedCycle> priced =
          p ? price_cycles_discounted(instance_, duals, *p, exclude)
            : price_cycles_deterministic(instance_, duals, exclude);
      if (priced.empty()) return true;
      for (const PricedCycle& pc : priced) add_column(pc.cycle);
    }
  }

  // Vertices covered by a structure fixed to one at this node.
  std::vector<char> forced_vertices(const std::vector<Fixing>& fixings) const {
    std::vector<char> forced(instance_.num_vertices() + 1, 0);
    for (const Fixing& f : fixings) {
      if (f.value < 0.5) continue;
      const VarTag& tag = master_.variable(f.var).tag;
      if (tag.kind == VarKind::kStructureZ) {
        for (const Vertex v : master_.structures()[tag.structure].vertices) {
          forced[v] = 1;
        }
      } else {
        forced[tag.i] = 1;
        forced[tag.j] = 1;
      }
    }
    return forced;
  }

  // Most fractional cycle column, else most fractional chain arc; -1 when
  // the point is integral.
  int pick_branch_variable(const std::vector<double>& x) const {
    auto most_fractional = [&](int first, int last) {
      int best = -1;
      double best_frac = kIntegralityTol;
      for (int v = first; v < last; ++v) {
        const double f = std::fabs(x[v] - std::round(x[v]));
        if (f > best_frac) {
          best_frac = f;
          best = v;
        }
      }
      return best;
    };
    const int cycle_var = most_fractional(num_arc_vars_, master_.num_variables());
    if (cycle_var >= 0) return cycle_var;
    return most_fractional(0, num_arc_vars_);
  }

  void accept(const std::vector<double>& x) {
    std::vector<double> point(x.size());
    for (std::size_t v = 0; v < x.size(); ++v) point[v] = std::round(x[v]);
    const double value = master_.objective_value(point);
    if (!has_incumbent_ || value > incumbent_value_) {
      has_incumbent_ = true;
      incumbent_value_ = value;
      incumbent_ = std::move(point);
    }
  }

  const Instance& instance_;
  const BnpConfig& config_;
  MipModel master_;
  std::chrono::steady_clock::time_point start_;
  std::vector<int> capacity_row_;
  int num_arc_vars_ = 0;
  std::set<Cycle> pool_;
  BnpStats stats_;
  bool has_incumbent_ = false;
  double incumbent_value_ = 0.0;
  std::vector<double> incumbent_;
};

}  // namespace

BnpResult solve_picef_bnp(const Instance& instance, const BnpConfig& config) {
  return BranchAndPrice(instance, config).run();
}

}  // namespace exclear
