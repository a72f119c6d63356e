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

#include "exclear/error.hpp"
#include "exclear/harness.hpp"
#include "exclear/solver.hpp"

namespace exclear {

LprComparison compare_lprs(const Instance& instance,
                           const std::vector<Formulation>& formulations) {
  LprComparison out;
  for (const Formulation f : formulations) {
    if (out.values.count(f)) continue;
    const LpOutcome lp = solve_lp(build_formulation(instance, f));
    if (lp.status != LpStatus::kOptimal) {
      throw Error(ErrorCode::kNumericalFailure,
                  formulation_name(f) + " relaxation is " +
                      std::string(lp_status_name(lp.status)));
    }
    out.values[f] = lp.value;
  }
  for (auto a = out.values.begin(); a != out.values.end(); ++a) {
    for (auto b = std::next(a); b != out.values.end(); ++b) {
      out.gaps.push_back({a->first, b->first, a->second - b->second});
    }
  }
  return out;
}

}  // namespace exclear
