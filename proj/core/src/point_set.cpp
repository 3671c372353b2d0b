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

#include "bridgevario/point_set.hpp"

#include <cmath>
#include <sstream>

#include "bridgevario/error.hpp"

namespace bridgevario {

PointSet PointSet::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "point set must not be empty");
  }
  const std::size_t dim = rows.front().size();
  std::vector<double> coords;
  coords.reserve(rows.size() * dim);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != dim) {
      std::ostringstream msg;
      msg << "point " << i << " has dimension " << rows[i].size()
          << ", expected " << dim;
      throw Error(ErrorKind::kDimensionMismatch, msg.str());
    }
    coords.insert(coords.end(), rows[i].begin(), rows[i].end());
  }
  return from_flat(dim, std::move(coords));
}

PointSet PointSet::from_flat(std::size_t dim, std::vector<double> coords) {
  if (dim == 0) {
    throw Error(ErrorKind::kInvalidArgument, "dimension must be positive");
  }
  if (coords.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "point set must not be empty");
  }
  if (coords.size() % dim != 0) {
    throw Error(ErrorKind::kDimensionMismatch,
                "coordinate count is not a multiple of the dimension");
  }
  for (double c : coords) {
    if (!std::isfinite(c)) {
      throw Error(ErrorKind::kNonFinite, "coordinates must be finite");
    }
  }
  return PointSet(dim, std::move(coords));
}

PointSet PointSet::line(std::size_t n, double spacing) {
  std::vector<double> coords(n);
  for (std::size_t i = 0; i < n; ++i) coords[i] = static_cast<double>(i) * spacing;
  return from_flat(1, std::move(coords));
}

double PointSet::norm(std::size_t i) const noexcept {
  const auto p = (*this)[i];
  if (dim_ == 1) return std::abs(p[0]);
  double s = 0.0;
  for (double c : p) s += c * c;
  return std::sqrt(s);
}

double PointSet::distance(std::size_t i, std::size_t j) const noexcept {
  const auto a = (*this)[i];
  const auto b = (*this)[j];
  if (dim_ == 1) return std::abs(a[0] - b[0]);
  double s = 0.0;
  for (std::size_t k = 0; k < dim_; ++k) {
    const double d = a[k] - b[k];
    s += d * d;
  }
  return std::sqrt(s);
}

}  // namespace bridgevario
