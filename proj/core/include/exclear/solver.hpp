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

#ifndef EXCLEAR_SOLVER_HPP_
#define EXCLEAR_SOLVER_HPP_

#include <limits>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "exclear/mip_model.hpp"

namespace exclear {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpOptions {
  // Per-variable bound overrides; empty means the model's own bounds.
  std::vector<double> lower;
  std::vector<double> upper;
  double feasibility_tol = 1e-7;
  double optimality_tol = 1e-7;
};

struct LpOutcome {
  LpStatus status = LpStatus::kInfeasible;
  double value = 0.0;
  std::vector<double> primal;
  // One dual per constraint; >= 0 on <= rows and <= 0 on >= rows at an
  // optimum of the maximisation.
  std::vector<double> duals;
  // c_j - y^T A_j for every variable.
  std::vector<double> reduced_costs;
  long iterations = 0;
};

enum class SearchOrder { kDepthFirst, kBestBound };

struct MipConfig {
  long node_limit = 0;  // 0: unlimited
  double time_limit_s = std::numeric_limits<double>::infinity();
  SearchOrder search = SearchOrder::kDepthFirst;
};

enum class MipStatus { kOptimal, kInfeasible, kLimitReached };

struct MipOutcome {
  MipStatus status = MipStatus::kInfeasible;
  // Best incumbent; -inf when none was found.
  double value = -std::numeric_limits<double>::infinity();
  std::vector<double> assignment;
  long nodes_explored = 0;
  double bound = std::numeric_limits<double>::infinity();
  double root_lp_value = std::numeric_limits<double>::quiet_NaN();
};

std::string_view lp_status_name(LpStatus s);
std::string_view mip_status_name(MipStatus s);

// Dense bounded primal simplex (two-phase, Dantzig pricing with a Bland
// fallback under prolonged degeneracy). Integrality flags are ignored.
// Throws NumericalFailure when the iteration budget runs out.
LpOutcome simplex_solve(const MipModel& model, const LpOptions& options = {});

// LP-based branch and bound over binary variables: most-fractional
// branching, the up branch explored first.
MipOutcome branch_and_bound(const MipModel& model, const MipConfig& config = {});

// Pluggable solver seam. The built-in backend is always registered under
// the name "builtin".
class SolverBackend {
 public:
  virtual ~SolverBackend() = default;
  virtual std::string name() const = 0;
  virtual LpOutcome solve_lp(const MipModel& model, const LpOptions& options) = 0;
  virtual MipOutcome solve_mip(const MipModel& model, const MipConfig& config) = 0;
};

class BuiltinBackend final : public SolverBackend {
 public:
  std::string name() const override { return "builtin"; }
  LpOutcome solve_lp(const MipModel& model, const LpOptions& options) override {
    return simplex_solve(model, options);
  }
  MipOutcome solve_mip(const MipModel& model, const MipConfig& config) override {
    return branch_and_bound(model, config);
  }
};

// Registers (or replaces) a backend under adapter->name() and routes every
// subsequent solve_lp/solve_mip call to it.
void register_backend(std::shared_ptr<SolverBackend> adapter);
// Routes solves to a previously registered backend; throws UnknownBackend.
void select_backend(std::string_view name);
std::shared_ptr<SolverBackend> active_backend();
std::vector<std::string> registered_backends();
// Drops every non-builtin registration and reactivates the built-in solver.
void reset_backends();

LpOutcome solve_lp(const MipModel& model, const LpOptions& options = {});
MipOutcome solve_mip(const MipModel& model, const MipConfig& config = {});

struct CrossCheck {
  bool diverged = false;
  double reference_value = 0.0;
  double candidate_value = 0.0;
  std::string detail;
};

// Solves the model with both backends and flags status or value divergence
// beyond `tolerance`.
CrossCheck cross_check_mip(const MipModel& model, SolverBackend& reference,
                           SolverBackend& candidate, double tolerance = 1e-6,
                           const MipConfig& config = {});
CrossCheck cross_check_lp(const MipModel& model, SolverBackend& reference,
                          SolverBackend& candidate, double tolerance = 1e-6);

}  // namespace exclear

#endif  // EXCLEAR_SOLVER_HPP_
