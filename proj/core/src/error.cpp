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

#include "bridgevario/error.hpp"

namespace bridgevario {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kOutOfRange:
      return "OutOfRange";
    case ErrorKind::kNonFinite:
      return "NonFinite";
    case ErrorKind::kRegime:
      return "RegimeError";
    case ErrorKind::kWeightSum:
      return "WeightSumError";
    case ErrorKind::kDimensionMismatch:
      return "DimensionMismatch";
    case ErrorKind::kInvalidArgument:
      return "InvalidArgument";
    case ErrorKind::kNotPSD:
      return "NotPSD";
    case ErrorKind::kSizeCap:
      return "SizeCap";
    case ErrorKind::kEmbeddingFailed:
      return "EmbeddingFailed";
    case ErrorKind::kDegenerateGeometry:
      return "DegenerateGeometry";
    case ErrorKind::kTooFewBins:
      return "TooFewBins";
    case ErrorKind::kNoProgress:
      return "NoProgress";
    case ErrorKind::kIndexOutOfRange:
      return "IndexOutOfRange";
    case ErrorKind::kEmptySeries:
      return "EmptySeries";
  }
  return "Unknown";
}

}  // namespace bridgevario
