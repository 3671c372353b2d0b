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

#include "bridgevario/extremes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "bridgevario/error.hpp"
#include "bridgevario/parallel.hpp"
#include "bridgevario/random.hpp"

namespace bridgevario {

double std_normal_cdf(double x) noexcept {
  if (std::isnan(x)) return x;
  const double lower_tail =
      0.5 * std::erfc(std::abs(x) / std::numbers::sqrt2);
  return x <= 0.0 ? lower_tail : 1.0 - lower_tail;
}

ExtremalCoefficient theoretical_extremal_coeff(const Variogram& v, double lag) {
  const double gamma = v(lag);
  const double theta = 2.0 * std_normal_cdf(0.5 * std::sqrt(gamma));
  return {std::clamp(theta, 1.0, 2.0), lag};
}

namespace {

// Per-point ingredients of the spectral functions normalized at x_k.
struct SpectralModel {
  std::vector<double> mean;  // -gamma(x_j - x_k) / 2
  GaussianSampler sampler;
};

SpectralModel spectral_model(const Variogram& v, const PointSet& points,
                             std::size_t k) {
  const std::size_t n = points.size();
  std::vector<double> to_k(n);
  for (std::size_t j = 0; j < n; ++j) to_k[j] = v(points.distance(j, k));

  Eigen::MatrixXd cov(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    cov(j, j) = to_k[j];
    for (std::size_t l = 0; l < j; ++l) {
      const double c = 0.5 * (to_k[j] + to_k[l] - v(points.distance(j, l)));
      cov(j, l) = c;
      cov(l, j) = c;
    }
  }
  std::vector<double> mean(n);
  for (std::size_t j = 0; j < n; ++j) mean[j] = -0.5 * to_k[j];
  return {std::move(mean), GaussianSampler(cov)};
}

}  // namespace

MaxStableRealization simulate_brown_resnick(const Variogram& v,
                                            const PointSet& points,
                                            std::uint64_t seed,
                                            std::size_t n_rep,
                                            const BrownResnickOptions& options) {
  if (n_rep == 0) {
    throw Error(ErrorKind::kInvalidArgument, "n_rep must be positive");
  }
  const std::size_t n = points.size();
  if (n > options.max_points) {
    std::ostringstream msg;
    msg << n << " points exceed the cap of " << options.max_points;
    throw Error(ErrorKind::kSizeCap, msg.str());
  }

  std::vector<SpectralModel> models;
  models.reserve(n);
  for (std::size_t k = 0; k < n; ++k) models.push_back(spectral_model(v, points, k));

  using RowMajor =
      Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  RowMajor values(n_rep, n);
  parallel_for(n_rep, options.threads, [&](std::size_t r) {
    Xoshiro256 rng(derive_stream(seed, r));
    std::span<double> z(values.row(r).data(), n);
    std::fill(z.begin(), z.end(), 0.0);
    std::vector<double> y(n);
    for (std::size_t k = 0; k < n; ++k) {
      const SpectralModel& model = models[k];
      double zeta = rng.exponential();
      while (1.0 / zeta > z[k]) {
        model.sampler.sample(rng, y);
        for (std::size_t j = 0; j < n; ++j) {
          y[j] = std::exp(y[j] + model.mean[j]) / zeta;
        }
        // y[k] = 1 / zeta exactly: the Gaussian part and the mean vanish at x_k.
        bool accepted = true;
        for (std::size_t i = 0; i < k && accepted; ++i) {
          accepted = y[i] <= z[i];
        }
        if (accepted) {
          for (std::size_t j = 0; j < n; ++j) z[j] = std::max(z[j], y[j]);
        }
        zeta += rng.exponential();
      }
    }
  });
  return {points, values, seed};
}

ExtremalCoefficient estimate_extremal_coeff(const MaxStableRealization& real,
                                            std::size_t i, std::size_t j) {
  const auto n = static_cast<std::size_t>(real.values.cols());
  if (i >= n || j >= n || i == j) {
    std::ostringstream msg;
    msg << "need two distinct indices below " << n << ", got " << i << " and "
        << j;
    throw Error(ErrorKind::kIndexOutOfRange, msg.str());
  }
  const auto reps = static_cast<std::size_t>(real.values.rows());
  if (reps < 100) {
    throw Error(ErrorKind::kInvalidArgument,
                "need at least 100 replicates to estimate theta");
  }
  double sum = 0.0;
  for (std::size_t r = 0; r < reps; ++r) {
    sum += 1.0 / std::max(real.values(r, i), real.values(r, j));
  }
  const double theta = static_cast<double>(reps) / sum;
  return {std::clamp(theta, 1.0, 2.0), real.points.distance(i, j)};
}

}  // namespace bridgevario
