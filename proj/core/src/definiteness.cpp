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

#include "bridgevario/definiteness.hpp"

#include <cmath>
#include <sstream>

#include "bridgevario/error.hpp"

namespace bridgevario {

double cnd_quadratic_form(const Variogram& v, const PointSet& points,
                          std::span<const double> weights) {
  const std::size_t n = points.size();
  if (weights.size() != n) {
    std::ostringstream msg;
    msg << weights.size() << " weights for " << n << " points";
    throw Error(ErrorKind::kDimensionMismatch, msg.str());
  }
  if (n < 2) {
    throw Error(ErrorKind::kInvalidArgument, "need at least two points");
  }
  double sum = 0.0;
  double magnitude = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w)) {
      throw Error(ErrorKind::kNonFinite, "weights must be finite");
    }
    sum += w;
    magnitude += std::abs(w);
  }
  if (std::abs(sum) > 1e-12 * magnitude) {
    std::ostringstream msg;
    msg << "weights must sum to zero, got " << sum;
    throw Error(ErrorKind::kWeightSum, msg.str());
  }

  // Diagonal terms vanish since v(0) = 0; off-diagonal pairs appear twice.
  double q = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < i; ++j) {
      row += weights[j] * v(points.distance(i, j));
    }
    q += 2.0 * weights[i] * row;
  }
  return q;
}

}  // namespace bridgevario
