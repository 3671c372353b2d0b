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
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "bridgevario/model.hpp"
#include "bridgevario/point_set.hpp"

namespace bridgevario {

struct VariogramBin {
  /// Mean distance of the pairs in the bin, or the bin midpoint when empty.
  double lag = 0.0;
  /// Matheron estimate; empty when the bin holds no pairs.
  std::optional<double> gamma;
  std::size_t pairs = 0;
};

/// Binned Matheron estimates. Lags are strictly increasing and every
/// nonempty bin carries a finite, nonnegative estimate.
class EmpiricalVariogram {
 public:
  /// Validates the invariants above; throws Error(kInvalidArgument).
  static EmpiricalVariogram make(std::vector<VariogramBin> bins,
                                 double max_lag);

  const std::vector<VariogramBin>& bins() const noexcept { return bins_; }
  double max_lag() const noexcept { return max_lag_; }
  std::size_t n_bins() const noexcept { return bins_.size(); }
  std::size_t nonempty_bins() const noexcept;

 private:
  EmpiricalVariogram(std::vector<VariogramBin> bins, double max_lag)
      : bins_(std::move(bins)), max_lag_(max_lag) {}

  std::vector<VariogramBin> bins_;
  double max_lag_;
};

/// Method-of-moments estimate from `values` (n_rep x n, column i at
/// points[i]). Pairs at distance d in (0, max_lag] contribute
/// (z_i - z_j)^2 / 2 for every replicate to the bin containing d; bins split
/// (0, max_lag] into n_bins equal intervals. max_lag defaults to half the
/// largest pairwise distance.
///
/// Throws Error(kDimensionMismatch) if the columns do not match the points,
/// Error(kDegenerateGeometry) if all points coincide and
/// Error(kInvalidArgument) for n < 2, n_bins == 0 or a non-positive max_lag.
EmpiricalVariogram empirical_variogram(const PointSet& points,
                                       const Eigen::MatrixXd& values,
                                       std::size_t n_bins,
                                       std::optional<double> max_lag = {});

/// Cressie-weighted least squares
///   sum over nonempty bins of N_b (gamma_b - gamma(h_b))^2 / max(gamma(h_b), 1e-12)^2.
/// Throws Error(kTooFewBins) with fewer than 4 nonempty bins.
double wls_objective(const ModelParams& params, const EmpiricalVariogram& emp);

/// Unconstrained coordinates used by the fit:
///   (log(alpha / (2 - alpha)), log(2 - beta), log scale, log variance).
/// beta = 0 is an interior point, so the optimizer moves freely between the
/// bounded and unbounded regimes.
std::array<double, 4> to_unconstrained(const ModelParams& params);

/// Inverse of to_unconstrained. Throws the ModelParams errors when the
/// coordinates map outside the valid domain (e.g. overflowing scale).
ModelParams from_unconstrained(const std::array<double, 4>& u);

struct FitOptions {
  int max_iter = 2000;
  double tol = 1e-10;
  /// Quasi-random starting points in addition to `init`.
  int multistart_count = 8;
  unsigned threads = 0;
};

struct FitResult {
  ModelParams params;
  double objective = 0.0;
  int iterations = 0;
  bool converged = false;
  RegimeLabel regime = RegimeLabel::kUnboundedMixing;
  /// alpha > 1.999: the logistic transform only reaches 2 in the limit.
  bool boundary_suspect = false;
  /// Index of the winning start (0 is `init` when given).
  int start_index = 0;
};

/// Minimizes wls_objective with Nelder-Mead in the unconstrained coordinates
/// from `init` (if any) and multistart_count points of a Halton sequence
/// over a box derived from the data. The lowest objective wins; ties go to
/// the lowest start index. Deterministic for fixed inputs.
///
/// Throws Error(kTooFewBins), and Error(kNoProgress) if no start improves on
/// its initial objective.
FitResult fit(const EmpiricalVariogram& emp,
              const std::optional<ModelParams>& init = {},
              const FitOptions& options = {});

}  // namespace bridgevario
