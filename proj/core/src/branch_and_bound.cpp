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
#include <queue>
#include <vector>

#include "exclear/error.hpp"
#include "exclear/solver.hpp"

namespace exclear {
namespace {

constexpr double kIntegralityTol = 1e-6;

struct Node {
  std::vector<double> lower;
  std::vector<double> upper;
  double parent_bound = std::numeric_limits<double>::infinity();
  long order = 0;
};

struct WorseBound {
  bool operator()(const Node& a, const Node& b) const {
    if (a.parent_bound != b.parent_bound) return a.parent_bound < b.parent_bound;
    return a.order > b.order;
  }
};

// Open-node container: LIFO for depth-first search, max-heap on the parent
// bound otherwise.
class Frontier {
 public:
  explicit Frontier(SearchOrder order) : order_(order) {}
  bool empty() const { return order_ == SearchOrder::kDepthFirst ? stack_.empty() : heap_.empty(); }
  void push(Node node) {
    node.order = counter_++;
    if (order_ == SearchOrder::kDepthFirst) {
      stack_.push_back(std::move(node));
    } else {
      heap_.push(std::move(node));
    }
  }
  Node pop() {
    if (order_ == SearchOrder::kDepthFirst) {
      Node n = std::move(stack_.back());
      stack_.pop_back();
      return n;
    }
    Node n = heap_.top();
    heap_.pop();
    return n;
  }
  double best_bound() const {
    double b = -std::numeric_limits<double>::infinity();
    if (order_ == SearchOrder::kDepthFirst) {
      for (const Node& n : stack_) b = std::max(b, n.parent_bound);
    } else if (!heap_.empty()) {
      b = heap_.top().parent_bound;
    }
    return b;
  }

 private:
  SearchOrder order_;
  long counter_ = 0;
  std::vector<Node> stack_;
  std::priority_queue<Node, std::vector<Node>, WorseBound> heap_;
};

double fractionality(double v) { return std::fabs(v - std::round(v)); }

}  // namespace

std::string_view mip_status_name(MipStatus s) {
  switch (s) {
    case MipStatus::kOptimal: return "optimal";
    case MipStatus::kInfeasible: return "infeasible";
    case MipStatus::kLimitReached: return "limit_reached";
  }
  return "unknown";
}

MipOutcome branch_and_bound(const MipModel& model, const MipConfig& config) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const int n = model.num_variables();

  MipOutcome out;
  Frontier frontier(config.search);
  Node root;
  root.lower.resize(n);
  root.upper.resize(n);
  for (int j = 0; j < n; ++j) {
    const Variable& v = model.variable(j);
    root.lower[j] = v.integral ? std::ceil(v.lower - kIntegralityTol) : v.lower;
    root.upper[j] = v.integral ? std::floor(v.upper + kIntegralityTol) : v.upper;
  }
  frontier.push(std::move(root));

  auto pruned = [&](double bound) {
    if (!std::isfinite(out.value)) return false;
    return bound <= out.value + 1e-6 * (1.0 + std::fabs(out.value));
  };

  bool stopped = false;
  while (!frontier.empty()) {
    if (config.node_limit > 0 && out.nodes_explored >= config.node_limit) {
      stopped = true;
      break;
    }
    if (std::isfinite(config.time_limit_s)) {
      const std::chrono::duration<double> elapsed = Clock::now() - start;
      if (elapsed.count() >= config.time_limit_s) {
        stopped = true;
        break;
      }
    }
    Node node = frontier.pop();
    if (pruned(node.parent_bound)) continue;
    ++out.nodes_explored;

    LpOptions lp;
    lp.lower = node.lower;
    lp.upper = node.upper;
    const LpOutcome relax = simplex_solve(model, lp);
    if (relax.status == LpStatus::kUnbounded) {
      throw Error(ErrorCode::kUnsupported, "LP relaxation is unbounded");
    }
    if (relax.status == LpStatus::kInfeasible) continue;
    if (out.nodes_explored == 1) out.root_lp_value = relax.value;
    if (pruned(relax.value)) continue;

    int branch_var = -1;
    double best_frac = kIntegralityTol;
    for (int j = 0; j < n; ++j) {
      if (!model.variable(j).integral) continue;
      const double f = fractionality(relax.primal[j]);
      if (f > best_frac) {
        best_frac = f;
        branch_var = j;
      }
    }

    if (branch_var < 0) {
      std::vector<double> point = relax.primal;
      for (int j = 0; j < n; ++j) {
        if (model.variable(j).integral) point[j] = std::round(point[j]);
      }
      if (model.max_violation(point) > 1e-6) {
        throw Error(ErrorCode::kNumericalFailure,
                    "rounded LP solution violates the model");
      }
      const double value = model.objective_value(point);
      if (value > out.value) {
        out.value = value;
        out.assignment = std::move(point);
      }
      continue;
    }

    const double v = relax.primal[branch_var];
    Node down{node.lower, node.upper, relax.value, 0};
    down.upper[branch_var] = std::floor(v);
    Node up{std::move(node.lower), std::move(node.upper), relax.value, 0};
    up.lower[branch_var] = std::ceil(v);
    // Depth-first pops the last push, so the up branch goes in second.
    frontier.push(std::move(down));
    frontier.push(std::move(up));
  }

  const bool has_incumbent = std::isfinite(out.value);
  if (stopped) {
    out.status = MipStatus::kLimitReached;
    out.bound = std::max(frontier.best_bound(), out.value);
  } else {
    out.status = has_incumbent ? MipStatus::kOptimal : MipStatus::kInfeasible;
    out.bound = has_incumbent ? out.value : -std::numeric_limits<double>::infinity();
  }
  return out;
}

}  // namespace exclear
