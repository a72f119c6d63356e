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

#include <random>

#include "exclear/error.hpp"
#include "exclear/instance.hpp"

namespace exclear {

Instance generate_random(const GeneratorParams& params) {
  if (!(params.arc_density >= 0.0 && params.arc_density <= 1.0)) {
    throw Error(ErrorCode::kBadParameter, "arc_density must lie in [0, 1]");
  }
  if (params.weights.mode == WeightSpec::Mode::kUniformInt &&
      (params.weights.lo < 0 || params.weights.hi < params.weights.lo)) {
    throw Error(ErrorCode::kBadParameter,
                "uniform-int weights need 0 <= lo <= hi");
  }
  if (params.num_ndds < 0 || params.num_pairs < 0) {
    throw Error(ErrorCode::kBadParameter, "vertex counts must be nonnegative");
  }

  // mt19937_64's output sequence is fixed by the standard; the std
  // distributions are not, so the draws below are done by hand.
  std::mt19937_64 rng(params.seed);
  const auto unit_draw = [&rng] {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  const auto int_draw = [&rng](int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x = rng();
    while (x >= limit) x = rng();
    return lo + static_cast<int>(x % span);
  };

  const int n = params.num_ndds + params.num_pairs;
  std::vector<Arc> arcs;
  for (Vertex src = 1; src <= n; ++src) {
    for (Vertex dst = params.num_ndds + 1; dst <= n; ++dst) {
      if (src == dst) continue;
      if (unit_draw() >= params.arc_density) continue;
      double w = 1.0;
      if (params.weights.mode == WeightSpec::Mode::kUniformInt) {
        w = int_draw(params.weights.lo, params.weights.hi);
      }
      arcs.push_back({src, dst, w});
    }
  }
  return build_instance(params.num_ndds, params.num_pairs, std::move(arcs),
                        params.cycle_cap, params.chain_cap,
                        params.failure_prob);
}

}  // namespace exclear
