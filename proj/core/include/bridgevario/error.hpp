// Copyright 2026 The bridgevario Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bridgevario {

/// Failure categories raised by the library. The CLI maps these onto exit
/// codes, so new kinds must be classified in `is_numerical_failure`.
enum class ErrorKind {
  kOutOfRange,
  kNonFinite,
  kRegime,
  kWeightSum,
  kDimensionMismatch,
  kInvalidArgument,
  kNotPSD,
  kSizeCap,
  kEmbeddingFailed,
  kDegenerateGeometry,
  kTooFewBins,
  kNoProgress,
  kIndexOutOfRange,
  kEmptySeries,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// True for failures of a numerical procedure on otherwise valid input.
constexpr bool is_numerical_failure(ErrorKind kind) noexcept {
  return kind == ErrorKind::kNotPSD || kind == ErrorKind::kEmbeddingFailed ||
         kind == ErrorKind::kNoProgress;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bridgevario
