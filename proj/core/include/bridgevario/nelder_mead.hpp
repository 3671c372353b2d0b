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

#include <functional>
#include <span>
#include <vector>

namespace bridgevario {

struct NelderMeadOptions {
  int max_iter = 2000;
  /// Stop once max f - min f over the simplex drops below this.
  double tol = 1e-10;
  /// Offset of the initial simplex vertices along each coordinate axis.
  double initial_step = 0.5;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  /// Value at the starting point, for progress checks.
  double initial_value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Derivative-free minimization with the standard coefficients: reflection 1,
/// expansion 2, contraction 0.5, shrink 0.5. Non-finite objective values are
/// treated as +infinity.
NelderMeadResult nelder_mead(
    const std::function<double(std::span<const double>)>& objective,
    std::span<const double> start, const NelderMeadOptions& options = {});

}  // namespace bridgevario
