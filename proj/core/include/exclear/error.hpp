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

#ifndef EXCLEAR_ERROR_HPP_
#define EXCLEAR_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace exclear {

enum class ErrorCode {
  kLoopArc,
  kArcIntoNdd,
  kDuplicateArc,
  kVertexOutOfRange,
  kNegativeWeight,
  kBadProbability,
  kBadParameter,
  kSyntaxError,
  kArcNotInCopy,
  kNddsPresent,
  kCapTooSmallForReduced2,
  kPositionOutOfSet,
  kModelTooLarge,
  kUnsupported,
  kInfeasibleAssignment,
  kNumericalFailure,
  kLimitReached,
  kNegativeWeightInput,
  kTooLargeForOracle,
  kBadFamilyParams,
  kNotAClosedWalk,
  kUnknownBackend,
};

std::string_view error_code_name(ErrorCode code);

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace exclear

#endif  // EXCLEAR_ERROR_HPP_
