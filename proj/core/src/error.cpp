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

namespace exclear {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLoopArc: return "LoopArc";
    case ErrorCode::kArcIntoNdd: return "ArcIntoNdd";
    case ErrorCode::kDuplicateArc: return "DuplicateArc";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kNegativeWeight: return "NegativeWeight";
    case ErrorCode::kBadProbability: return "BadProbability";
    case ErrorCode::kBadParameter: return "BadParameter";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kArcNotInCopy: return "ArcNotInCopy";
    case ErrorCode::kNddsPresent: return "NddsPresent";
    case ErrorCode::kCapTooSmallForReduced2: return "CapTooSmallForReduced2";
    case ErrorCode::kPositionOutOfSet: return "PositionOutOfSet";
    case ErrorCode::kModelTooLarge: return "ModelTooLarge";
    case ErrorCode::kUnsupported: return "Unsupported";
    case ErrorCode::kInfeasibleAssignment: return "InfeasibleAssignment";
    case ErrorCode::kNumericalFailure: return "NumericalFailure";
    case ErrorCode::kLimitReached: return "LimitReached";
    case ErrorCode::kNegativeWeightInput: return "NegativeWeightInput";
    case ErrorCode::kTooLargeForOracle: return "TooLargeForOracle";
    case ErrorCode::kBadFamilyParams: return "BadFamilyParams";
    case ErrorCode::kNotAClosedWalk: return "NotAClosedWalk";
    case ErrorCode::kUnknownBackend: return "UnknownBackend";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

}  // namespace exclear
