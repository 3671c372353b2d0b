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

#include "bridgevario/inference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "bridgevario/error.hpp"
#include "bridgevario/nelder_mead.hpp"
#include "bridgevario/parallel.hpp"

namespace bridgevario {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kWeightFloor = 1e-12;
constexpr std::size_t kMinBins = 4;

// Radical inverse of `index` in `base`: the Halton coordinate.
double radical_inverse(std::size_t index, std::size_t base) {
  double result = 0.0;
  double f = 1.0 / static_cast<double>(base);
  while (index > 0) {
    result += f * static_cast<double>(index % base);
    index /= base;
    f /= static_cast<double>(base);
  }
  return result;
}

struct Box {
  std::array<double, 4> lo;
  std::array<double, 4> hi;
};

// Search box in unconstrained coordinates: alpha in [0.1, 1.9],
// beta in [-3, 1.9], scale over the observed lag range, variance over the
// observed gamma range.
Box start_box(const EmpiricalVariogram& emp) {
  double lag_lo = kInf, lag_hi = 0.0, gamma_lo = kInf, gamma_hi = 0.0;
  for (const auto& bin : emp.bins()) {
    if (!bin.gamma) continue;
    lag_lo = std::min(lag_lo, bin.lag);
    lag_hi = std::max(lag_hi, bin.lag);
    if (*bin.gamma > 0.0) {
      gamma_lo = std::min(gamma_lo, *bin.gamma);
      gamma_hi = std::max(gamma_hi, *bin.gamma);
    }
  }
  if (!(gamma_hi > 0.0)) {
    gamma_lo = 1e-3;
    gamma_hi = 1.0;
  }
  return {{std::log(0.1 / 1.9), std::log(0.1), std::log(lag_lo), std::log(gamma_lo)},
          {std::log(1.9 / 0.1), std::log(5.0), std::log(lag_hi), std::log(gamma_hi)}};
}

}  // namespace

std::size_t EmpiricalVariogram::nonempty_bins() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      bins_.begin(), bins_.end(), [](const VariogramBin& b) { return b.gamma.has_value(); }));
}

EmpiricalVariogram EmpiricalVariogram::make(std::vector<VariogramBin> bins,
                                            double max_lag) {
  if (bins.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "empirical variogram has no bins");
  }
  for (std::size_t b = 0; b < bins.size(); ++b) {
    const auto& bin = bins[b];
    if (!std::isfinite(bin.lag) || bin.lag < 0.0) {
      throw Error(ErrorKind::kInvalidArgument, "bin lags must be finite and >= 0");
    }
    if (b > 0 && !(bin.lag > bins[b - 1].lag)) {
      throw Error(ErrorKind::kInvalidArgument,
                  "bin lags must be strictly increasing");
    }
    if (bin.gamma && !(std::isfinite(*bin.gamma) && *bin.gamma >= 0.0)) {
      throw Error(ErrorKind::kInvalidArgument,
                  "bin estimates must be finite and >= 0");
    }
    if (bin.gamma.has_value() != (bin.pairs > 0)) {
      throw Error(ErrorKind::kInvalidArgument,
                  "a bin has an estimate exactly when it has pairs");
    }
  }
  return EmpiricalVariogram(std::move(bins), max_lag);
}

EmpiricalVariogram empirical_variogram(const PointSet& points,
                                       const Eigen::MatrixXd& values,
                                       std::size_t n_bins,
                                       std::optional<double> max_lag) {
  const std::size_t n = points.size();
  if (static_cast<std::size_t>(values.cols()) != n) {
    std::ostringstream msg;
    msg << values.cols() << " value columns for " << n << " points";
    throw Error(ErrorKind::kDimensionMismatch, msg.str());
  }
  if (n < 2) throw Error(ErrorKind::kInvalidArgument, "need at least two points");
  if (n_bins == 0) throw Error(ErrorKind::kInvalidArgument, "n_bins must be positive");
  if (values.rows() == 0) {
    throw Error(ErrorKind::kInvalidArgument, "need at least one replicate");
  }
  if (!values.allFinite()) {
    throw Error(ErrorKind::kNonFinite, "field values must be finite");
  }

  double max_distance = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      max_distance = std::max(max_distance, points.distance(i, j));
    }
  }
  if (max_distance == 0.0) {
    throw Error(ErrorKind::kDegenerateGeometry, "all points coincide");
  }
  const double cutoff = max_lag.value_or(0.5 * max_distance);
  if (!(std::isfinite(cutoff) && cutoff > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "max_lag must be positive");
  }

  const double width = cutoff / static_cast<double>(n_bins);
  std::vector<double> sum_sq(n_bins, 0.0), sum_lag(n_bins, 0.0);
  std::vector<std::size_t> pairs(n_bins, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const double d = points.distance(i, j);
      if (d == 0.0 || d > cutoff) continue;
      // Bin b covers (b * width, (b + 1) * width].
      const auto raw = static_cast<std::ptrdiff_t>(std::ceil(d / width)) - 1;
      const auto b = static_cast<std::size_t>(
          std::clamp<std::ptrdiff_t>(raw, 0, static_cast<std::ptrdiff_t>(n_bins) - 1));
      sum_sq[b] += 0.5 * (values.col(i) - values.col(j)).squaredNorm();
      sum_lag[b] += d;
      ++pairs[b];
    }
  }

  const auto reps = static_cast<double>(values.rows());
  std::vector<VariogramBin> bins(n_bins);
  for (std::size_t b = 0; b < n_bins; ++b) {
    if (pairs[b] == 0) {
      bins[b].lag = (static_cast<double>(b) + 0.5) * width;
      continue;
    }
    const auto count = static_cast<double>(pairs[b]);
    bins[b].lag = sum_lag[b] / count;
    bins[b].gamma = sum_sq[b] / (count * reps);
    bins[b].pairs = pairs[b];
  }
  return EmpiricalVariogram::make(std::move(bins), cutoff);
}

double wls_objective(const ModelParams& params, const EmpiricalVariogram& emp) {
  if (emp.nonempty_bins() < kMinBins) {
    std::ostringstream msg;
    msg << emp.nonempty_bins() << " nonempty bins, need at least " << kMinBins;
    throw Error(ErrorKind::kTooFewBins, msg.str());
  }
  double total = 0.0;
  for (const auto& bin : emp.bins()) {
    if (!bin.gamma) continue;
    const double model = evaluate(params, bin.lag);
    const double weight = std::max(model, kWeightFloor);
    const double residual = (*bin.gamma - model) / weight;
    total += static_cast<double>(bin.pairs) * residual * residual;
  }
  return std::isnan(total) ? kInf : total;
}

std::array<double, 4> to_unconstrained(const ModelParams& params) {
  const double alpha = params.alpha();
  return {std::log(alpha / (2.0 - alpha)), std::log(2.0 - params.beta()),
          std::log(params.scale()), std::log(params.variance())};
}

ModelParams from_unconstrained(const std::array<double, 4>& u) {
  const double alpha = 2.0 / (1.0 + std::exp(-u[0]));
  return ModelParams::make(alpha, 2.0 - std::exp(u[1]), std::exp(u[2]),
                           std::exp(u[3]));
}

FitResult fit(const EmpiricalVariogram& emp,
              const std::optional<ModelParams>& init,
              const FitOptions& options) {
  if (emp.nonempty_bins() < kMinBins) {
    std::ostringstream msg;
    msg << emp.nonempty_bins() << " nonempty bins, need at least " << kMinBins;
    throw Error(ErrorKind::kTooFewBins, msg.str());
  }

  std::vector<std::array<double, 4>> starts;
  if (init) starts.push_back(to_unconstrained(*init));
  const Box box = start_box(emp);
  constexpr std::array<std::size_t, 4> kPrimes = {2, 3, 5, 7};
  for (int s = 0; s < options.multistart_count; ++s) {
    std::array<double, 4> u{};
    for (std::size_t k = 0; k < 4; ++k) {
      const double t = radical_inverse(static_cast<std::size_t>(s) + 1, kPrimes[k]);
      u[k] = box.lo[k] + t * (box.hi[k] - box.lo[k]);
    }
    starts.push_back(u);
  }
  if (starts.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "no starting points");
  }

  const auto objective = [&emp](std::span<const double> x) {
    try {
      return wls_objective(from_unconstrained({x[0], x[1], x[2], x[3]}), emp);
    } catch (const Error&) {
      return kInf;
    }
  };
  NelderMeadOptions nm;
  nm.max_iter = options.max_iter;
  nm.tol = options.tol;

  std::vector<NelderMeadResult> runs(starts.size());
  parallel_for(starts.size(), options.threads, [&](std::size_t s) {
    runs[s] = nelder_mead(objective, starts[s], nm);
  });

  std::optional<std::size_t> best;
  for (std::size_t s = 0; s < runs.size(); ++s) {
    const auto& run = runs[s];
    if (!std::isfinite(run.value) || !(run.value < run.initial_value)) continue;
    if (!best || run.value < runs[*best].value) best = s;
  }
  if (!best) {
    // An exact fit at a start point cannot improve; accept it as is.
    for (std::size_t s = 0; s < runs.size(); ++s) {
      if (runs[s].value == 0.0) {
        best = s;
        break;
      }
    }
  }
  if (!best) {
    throw Error(ErrorKind::kNoProgress,
                "no starting point improved the objective");
  }

  const auto& run = runs[*best];
  const ModelParams params =
      from_unconstrained({run.x[0], run.x[1], run.x[2], run.x[3]});
  FitResult result{params};
  result.objective = wls_objective(params, emp);
  result.iterations = run.iterations;
  result.converged = run.converged;
  result.regime = classify_regime(params);
  result.boundary_suspect = params.alpha() > 1.999;
  result.start_index = static_cast<int>(*best);
  return result;
}

}  // namespace bridgevario
