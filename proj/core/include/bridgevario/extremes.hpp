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
#include <cstdint>

#include <Eigen/Core>

#include "bridgevario/gaussian_sim.hpp"
#include "bridgevario/point_set.hpp"
#include "bridgevario/variogram.hpp"

namespace bridgevario {

/// Standard normal distribution function, accurate to 1e-12 absolute.
/// Computed as erfc(|x| / sqrt 2) / 2 on the lower half, whose relative
/// accuracy (a few ulp in glibc) is far below the requirement, and reflected
/// as 1 - Phi(-x) on the upper half so that Phi(-x) = 1 - Phi(x) holds by
/// construction. Accepts +-infinity.
double std_normal_cdf(double x) noexcept;

/// Pairwise extremal coefficient in [1, 2] at a given lag; 1 means full
/// dependence and 2 independence.
struct ExtremalCoefficient {
  double theta = 1.0;
  double lag = 0.0;
};

/// Brown-Resnick extremal coefficient theta(h) = 2 Phi(sqrt(gamma(h)) / 2).
/// For a bounded variogram theta stays below 2 Phi(sqrt(sill) / 2) < 2 at
/// every lag, which is the signature of a non-ergodic field.
ExtremalCoefficient theoretical_extremal_coeff(const Variogram& v, double lag);

/// Max-stable samples with unit Frechet margins; `values` is n_rep x n and
/// strictly positive.
struct MaxStableRealization {
  PointSet points;
  Eigen::MatrixXd values;
  std::uint64_t seed = 0;
};

struct BrownResnickOptions {
  /// Each point needs its own spectral Cholesky factor.
  std::size_t max_points = 256;
  unsigned threads = 0;
};

/// Exact Brown-Resnick simulation by extremal functions. For each point x_k
/// the spectral process exp(W(x) - gamma(x - x_k) / 2), with W pinned at x_k
/// and Var(W(x) - W(y)) = gamma(x - y), is drawn against decreasing Poisson
/// levels until none can raise Z(x_k); a draw is kept only if it stays below Z at every earlier
/// point. Replicate r uses derive_stream(seed, r).
///
/// Throws Error(kSizeCap) above options.max_points and propagates kNotPSD.
MaxStableRealization simulate_brown_resnick(
    const Variogram& v, const PointSet& points, std::uint64_t seed,
    std::size_t n_rep, const BrownResnickOptions& options = {});

/// theta_hat = n_rep / sum_r 1 / max(Z_r(x_i), Z_r(x_j)), clamped to [1, 2].
/// The pairwise maximum is Frechet with scale theta, so E[1 / max] = 1 / theta.
/// Throws Error(kIndexOutOfRange) for invalid or equal indices and
/// Error(kInvalidArgument) below 100 replicates.
ExtremalCoefficient estimate_extremal_coeff(const MaxStableRealization& real,
                                            std::size_t i, std::size_t j);

}  // namespace bridgevario
