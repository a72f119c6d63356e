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

#ifndef EXCLEAR_TOOLS_CLI_HPP_
#define EXCLEAR_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace exclear::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInfeasible = 3;
inline constexpr int kExitDataError = 4;

// Runs one command line (without the program name). Reports go to `out`,
// diagnostics to `err`; `in` backs "--input -".
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace exclear::cli

#endif  // EXCLEAR_TOOLS_CLI_HPP_
