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

#include <cstddef>
#include <span>
#include <vector>

namespace bridgevario {

/// n points in R^dim, stored row-major. Always holds at least one point and
/// only finite coordinates.
class PointSet {
 public:
  /// Throws Error(kInvalidArgument) for an empty set or dim == 0,
  /// Error(kDimensionMismatch) for ragged rows and Error(kNonFinite) for
  /// non-finite coordinates.
  static PointSet from_rows(const std::vector<std::vector<double>>& rows);
  static PointSet from_flat(std::size_t dim, std::vector<double> coords);

  /// Points 0, h, 2h, ... on the real line.
  static PointSet line(std::size_t n, double spacing);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return coords_.size() / dim_; }

  std::span<const double> operator[](std::size_t i) const noexcept {
    return {coords_.data() + i * dim_, dim_};
  }

  /// Euclidean norm of point i.
  double norm(std::size_t i) const noexcept;
  /// Euclidean distance between points i and j.
  double distance(std::size_t i, std::size_t j) const noexcept;

  const std::vector<double>& coords() const noexcept { return coords_; }

 private:
  PointSet(std::size_t dim, std::vector<double> coords)
      : dim_(dim), coords_(std::move(coords)) {}

  std::size_t dim_;
  std::vector<double> coords_;
};

}  // namespace bridgevario
