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

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "bridgevario/model.hpp"
#include "bridgevario/point_set.hpp"
#include "bridgevario/random.hpp"
#include "bridgevario/variogram.hpp"

namespace bridgevario {

/// Simulated values at a fixed set of points. `values` is n_rep x n: row r is
/// replicate r, column i belongs to points[i].
struct FieldRealization {
  PointSet points;
  Eigen::MatrixXd values;
  std::uint64_t seed = 0;
};

struct SimulationOptions {
  /// Largest accepted point count; Cholesky costs O(n^3).
  std::size_t max_points = 4096;
  /// Worker threads for replicates; 0 selects THREADS or the hardware count.
  /// Output does not depend on this value.
  unsigned threads = 0;
};

/// Covariance of the field pinned at the origin,
/// K[i][j] = v(|x_i|) + v(|x_j|) - v(|x_i - x_j|).
Eigen::MatrixXd pinned_covariance_matrix(const Variogram& v,
                                         const PointSet& points);

struct JitteredCholesky {
  Eigen::MatrixXd lower;
  /// Diagonal shift added before the factorization succeeded.
  double jitter = 0.0;
};

/// Factors K + eps * I. eps starts at 0 and then runs through
/// 1e-10, 1e-9, ..., 1e-6 times trace(K) / n. Throws Error(kNotPSD) if every
/// level fails and Error(kNonFinite) for non-finite entries. The zero matrix
/// factors to the zero matrix.
JitteredCholesky cholesky_with_jitter(const Eigen::MatrixXd& k);

/// Draws zero-mean Gaussian vectors with a given covariance. Coordinates with
/// zero variance are exactly zero in every draw; the rest are factored with
/// cholesky_with_jitter.
class GaussianSampler {
 public:
  explicit GaussianSampler(const Eigen::MatrixXd& covariance);

  std::size_t size() const noexcept { return size_; }
  double jitter() const noexcept { return jitter_; }

  /// Writes one draw into `out` (length size()).
  void sample(Xoshiro256& rng, std::span<double> out) const;

 private:
  std::size_t size_;
  std::vector<std::size_t> active_;
  Eigen::MatrixXd lower_;
  double jitter_ = 0.0;
};

/// Exact simulation of the Gaussian field with variogram v pinned at the
/// origin (Z(0) = 0), valid for bounded and unbounded variograms alike.
/// Replicate r uses the stream derive_stream(seed, r).
/// Throws Error(kSizeCap) above options.max_points and propagates kNotPSD.
FieldRealization simulate_pinned_field(const Variogram& v,
                                       const PointSet& points,
                                       std::uint64_t seed, std::size_t n_rep,
                                       const SimulationOptions& options = {});

/// Regular grid of dim in {1, 2}. Point (i0, i1) sits at
/// (i0 * spacing[0], i1 * spacing[1]); the flat index is i0 * sizes[1] + i1.
class GridSpec {
 public:
  static GridSpec line(std::size_t size, double spacing);
  static GridSpec plane(std::array<std::size_t, 2> sizes,
                        std::array<double, 2> spacing);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size(std::size_t axis) const noexcept { return sizes_[axis]; }
  double spacing(std::size_t axis) const noexcept { return spacing_[axis]; }
  std::size_t total() const noexcept { return sizes_[0] * sizes_[1]; }

  PointSet points() const;

 private:
  GridSpec(std::size_t dim, std::array<std::size_t, 2> sizes,
           std::array<double, 2> spacing)
      : dim_(dim), sizes_(sizes), spacing_(spacing) {}

  std::size_t dim_;
  std::array<std::size_t, 2> sizes_;
  std::array<double, 2> spacing_;
};

struct EmbeddingInfo {
  /// Torus size per axis divided by the grid size.
  std::size_t padding = 0;
  /// Mass of the negative eigenvalues that were clipped to zero.
  double clipped = 0.0;
  /// Marginal variance of the synthesized field after clipping.
  double variance = 0.0;
};

/// Stationary simulation on a grid by circulant embedding of
/// covariance(params, .) for the bounded regime. The torus is padded by
/// factors 2, 4, ..., 64 until its DFT eigenvalues are >= -1e-9 * max and
/// the marginal variance after clipping is within 1% of the sill.
/// Throws Error(kRegime) for beta >= 0 and Error(kEmbeddingFailed) when no
/// padding qualifies.
FieldRealization circulant_embedding_simulate(
    const ModelParams& params, const GridSpec& grid, std::uint64_t seed,
    std::size_t n_rep, const SimulationOptions& options = {},
    EmbeddingInfo* info = nullptr);

}  // namespace bridgevario
