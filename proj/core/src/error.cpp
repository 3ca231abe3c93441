// Copyright 2026 The movmf Authors
//
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

#include "movmf/error.hpp"

namespace movmf {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kInsufficientData: return "InsufficientData";
    case ErrorCode::kBadDimension: return "BadDimension";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kEmptyCluster: return "EmptyCluster";
    case ErrorCode::kTooFewPoints: return "TooFewPoints";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kDurationMismatch: return "DurationMismatch";
    case ErrorCode::kEmptyTable: return "EmptyTable";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kRaggedRows: return "RaggedRows";
    case ErrorCode::kNegativeDuration: return "NegativeDuration";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace movmf
