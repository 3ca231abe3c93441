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

#ifndef MOVMF_ERROR_HPP_
#define MOVMF_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace movmf {

enum class ErrorCode {
  kZeroVector,
  kDimensionMismatch,
  kInsufficientData,
  kBadDimension,
  kInvalidArgument,
  kEmptyCluster,
  kTooFewPoints,
  kLengthMismatch,
  kDurationMismatch,
  kEmptyTable,
  kParseError,
  kRaggedRows,
  kNegativeDuration,
  kIoError,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` distinguishes the
/// failure class so callers (notably the CLI) can map it to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        detail_(what) {}

  ErrorCode code() const noexcept { return code_; }
  /// Message without the error-code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace movmf

#endif  // MOVMF_ERROR_HPP_
