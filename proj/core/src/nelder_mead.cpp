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

#include "bridgevario/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace bridgevario {
namespace {

double finite_or_inf(double v) {
  return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
}

}  // namespace

NelderMeadResult nelder_mead(
    const std::function<double(std::span<const double>)>& objective,
    std::span<const double> start, const NelderMeadOptions& options) {
  const std::size_t dim = start.size();
  auto f = [&](const std::vector<double>& x) {
    return finite_or_inf(objective(x));
  };

  std::vector<std::vector<double>> simplex(dim + 1,
                                           std::vector<double>(start.begin(),
                                                               start.end()));
  for (std::size_t i = 0; i < dim; ++i) simplex[i + 1][i] += options.initial_step;
  std::vector<double> values(dim + 1);
  for (std::size_t i = 0; i <= dim; ++i) values[i] = f(simplex[i]);

  NelderMeadResult result;
  result.initial_value = values[0];

  std::vector<std::size_t> order(dim + 1);
  std::vector<double> centroid(dim), reflected(dim), trial(dim);
  int iter = 0;
  for (; iter < options.max_iter; ++iter) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return values[a] < values[b];
    });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[dim - 1];
    if (std::isfinite(values[worst]) &&
        values[worst] - values[best] < options.tol) {
      result.converged = true;
      break;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t k = 0; k < dim; ++k) {
      for (std::size_t i = 0; i < dim; ++i) centroid[i] += simplex[order[k]][i];
    }
    for (double& c : centroid) c /= static_cast<double>(dim);

    for (std::size_t i = 0; i < dim; ++i) {
      reflected[i] = centroid[i] + (centroid[i] - simplex[worst][i]);
    }
    const double f_reflected = f(reflected);

    if (f_reflected < values[best]) {
      for (std::size_t i = 0; i < dim; ++i) {
        trial[i] = centroid[i] + 2.0 * (centroid[i] - simplex[worst][i]);
      }
      const double f_expanded = f(trial);
      if (f_expanded < f_reflected) {
        simplex[worst] = trial;
        values[worst] = f_expanded;
      } else {
        simplex[worst] = reflected;
        values[worst] = f_reflected;
      }
      continue;
    }
    if (f_reflected < values[second_worst]) {
      simplex[worst] = reflected;
      values[worst] = f_reflected;
      continue;
    }

    // Contraction: outside if the reflection improved on the worst point,
    // inside otherwise.
    const bool outside = f_reflected < values[worst];
    const std::vector<double>& toward = outside ? reflected : simplex[worst];
    for (std::size_t i = 0; i < dim; ++i) {
      trial[i] = centroid[i] + 0.5 * (toward[i] - centroid[i]);
    }
    const double f_contracted = f(trial);
    if (f_contracted < (outside ? f_reflected : values[worst])) {
      simplex[worst] = trial;
      values[worst] = f_contracted;
      continue;
    }

    for (std::size_t k = 1; k <= dim; ++k) {
      auto& vertex = simplex[order[k]];
      for (std::size_t i = 0; i < dim; ++i) {
        vertex[i] = simplex[best][i] + 0.5 * (vertex[i] - simplex[best][i]);
      }
      values[order[k]] = f(vertex);
    }
  }

  const auto best_it = std::min_element(values.begin(), values.end());
  const std::size_t best = static_cast<std::size_t>(best_it - values.begin());
  result.x = simplex[best];
  result.value = values[best];
  result.iterations = iter;
  return result;
}

}  // namespace bridgevario
