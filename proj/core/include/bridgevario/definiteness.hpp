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

#include <span>

#include "bridgevario/point_set.hpp"
#include "bridgevario/variogram.hpp"

namespace bridgevario {

/// Q = sum_i sum_j w_i w_j v(|x_i - x_j|) for weights summing to zero.
/// A variogram is conditionally negative definite, so Q <= 0 up to roundoff.
///
/// Requires |points| == |weights| >= 2 (Error(kDimensionMismatch) /
/// Error(kInvalidArgument)) and |sum w| <= 1e-12 * sum |w|
/// (Error(kWeightSum)).
double cnd_quadratic_form(const Variogram& v, const PointSet& points,
                          std::span<const double> weights);

}  // namespace bridgevario
