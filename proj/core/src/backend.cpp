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
#include <mutex>
#include <sstream>

#include "exclear/error.hpp"
#include "exclear/solver.hpp"

namespace exclear {
namespace {

struct Registry {
  std::mutex mu;
  std::map<std::string, std::shared_ptr<SolverBackend>, std::less<>> backends;
  std::shared_ptr<SolverBackend> active;

  Registry() { reset_locked(); }
  void reset_locked() {
    backends.clear();
    active = std::make_shared<BuiltinBackend>();
    backends.emplace(active->name(), active);
  }
};

Registry& registry() {
  static Registry r;
  return r;
}

bool values_differ(double a, double b, double tol) {
  if (std::isinf(a) || std::isinf(b)) return a != b;
  return std::fabs(a - b) > tol * (1.0 + std::fabs(a));
}

}  // namespace

void register_backend(std::shared_ptr<SolverBackend> adapter) {
  if (!adapter) throw Error(ErrorCode::kBadParameter, "null backend");
  Registry& r = registry();
  std::lock_guard lock(r.mu);
  r.backends[adapter->name()] = adapter;
  r.active = std::move(adapter);
}

void select_backend(std::string_view name) {
  Registry& r = registry();
  std::lock_guard lock(r.mu);
  const auto it = r.backends.find(name);
  if (it == r.backends.end()) {
    throw Error(ErrorCode::kUnknownBackend,
                "no solver backend named '" + std::string(name) + "'");
  }
  r.active = it->second;
}

std::shared_ptr<SolverBackend> active_backend() {
  Registry& r = registry();
  std::lock_guard lock(r.mu);
  return r.active;
}

std::vector<std::string> registered_backends() {
  Registry& r = registry();
  std::lock_guard lock(r.mu);
  std::vector<std::string> names;
  for (const auto& [name, backend] : r.backends) names.push_back(name);
  return names;
}

void reset_backends() {
  Registry& r = registry();
  std::lock_guard lock(r.mu);
  r.reset_locked();
}

LpOutcome solve_lp(const MipModel& model, const LpOptions& options) {
  return active_backend()->solve_lp(model, options);
}

MipOutcome solve_mip(const MipModel& model, const MipConfig& config) {
  return active_backend()->solve_mip(model, config);
}

CrossCheck cross_check_mip(const MipModel& model, SolverBackend& reference,
                           SolverBackend& candidate, double tolerance,
                           const MipConfig& config) {
  const MipOutcome a = reference.solve_mip(model, config);
  const MipOutcome b = candidate.solve_mip(model, config);
  CrossCheck check;
  check.reference_value = a.value;
  check.candidate_value = b.value;
  std::ostringstream detail;
  if (a.status != b.status) {
    check.diverged = true;
    detail << "status " << mip_status_name(a.status) << " vs "
           << mip_status_name(b.status);
  } else if (a.status == MipStatus::kOptimal &&
             values_differ(a.value, b.value, tolerance)) {
    check.diverged = true;
    detail << "objective " << a.value << " vs " << b.value;
  }
  check.detail = detail.str();
  return check;
}

CrossCheck cross_check_lp(const MipModel& model, SolverBackend& reference,
                          SolverBackend& candidate, double tolerance) {
  const LpOutcome a = reference.solve_lp(model, {});
  const LpOutcome b = candidate.solve_lp(model, {});
  CrossCheck check;
  check.reference_value = a.value;
  check.candidate_value = b.value;
  std::ostringstream detail;
  if (a.status != b.status) {
    check.diverged = true;
    detail << "status " << lp_status_name(a.status) << " vs "
           << lp_status_name(b.status);
  } else if (a.status == LpStatus::kOptimal &&
             values_differ(a.value, b.value, tolerance)) {
    check.diverged = true;
    detail << "objective " << a.value << " vs " << b.value;
  }
  check.detail = detail.str();
  return check;
}

}  // namespace exclear
