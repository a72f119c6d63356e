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

#include "report.hpp"

#include <regex>
#include <sstream>

#include "cli.hpp"

namespace exclear::testing {

CliResult invoke_cli(const CliCall& call) {
  std::istringstream in(call.stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  CliResult r;
  r.code = cli::run(call.args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string run_cli(const CliCall& call) {
  const CliResult r = invoke_cli(call);
  return r.code == 0 ? r.out : std::string();
}

std::string strip_wall_time(const std::string& report) {
  static const std::regex field(R"re("wall_time_ms":\s*[-0-9.eE+]+)re");
  return std::regex_replace(report, field, "\"wall_time_ms\": 0");
}

std::vector<CliCall> determinism_commands() {
  const CliCall gen{{"generate", "--ndds", "2", "--pairs", "10", "--density",
                     "0.3", "--weight-lo", "1", "--weight-hi", "4", "--cycle-cap",
                     "3", "--chain-cap", "3", "--seed", "17"},
                    ""};
  const std::string instance = run_cli(gen);
  std::vector<CliCall> calls = {gen};
  for (const char* f : {"cf", "picef", "picef-red", "hpief", "picef-bnp"}) {
    calls.push_back({{"solve", "--formulation", f}, instance});
  }
  calls.push_back({{"solve", "--formulation", "picef", "--failure-prob", "0.7"}, instance});
  calls.push_back({{"relax", "--formulation", "picef"}, instance});
  calls.push_back({{"compare"}, instance});
  return calls;
}

}  // namespace exclear::testing
