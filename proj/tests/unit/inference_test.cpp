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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "bridgevario/error.hpp"
#include "bridgevario/gaussian_sim.hpp"
#include "bridgevario/nelder_mead.hpp"

namespace bridgevario {
namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorKind::kInvalidArgument;
}

// Bins placed exactly at `lags` with noise-free model values.
EmpiricalVariogram exact_bins(const ModelParams& p, const std::vector<double>& lags,
                              std::size_t pairs = 100) {
  std::vector<VariogramBin> bins;
  for (double lag : lags) bins.push_back({lag, evaluate(p, lag), pairs});
  return EmpiricalVariogram::make(std::move(bins), lags.back());
}

std::vector<double> log_lags(double lo, double hi, int n) {
  std::vector<double> lags(n);
  for (int i = 0; i < n; ++i) lags[i] = lo * std::pow(hi / lo, i / (n - 1.0));
  return lags;
}

TEST(EmpiricalVariogram, TwoPointsOneReplicate) {
  const PointSet points = PointSet::line(2, 1.0);
  Eigen::MatrixXd values(1, 2);
  values << 0.0, 2.0;
  const auto emp = empirical_variogram(points, values, 4, 1.0);
  ASSERT_EQ(emp.n_bins(), 4u);
  EXPECT_EQ(emp.nonempty_bins(), 1u);
  const auto& last = emp.bins().back();
  ASSERT_TRUE(last.gamma.has_value());
  EXPECT_EQ(*last.gamma, 2.0);
  EXPECT_EQ(last.pairs, 1u);
  EXPECT_EQ(last.lag, 1.0);
  for (std::size_t b = 0; b < 3; ++b) {
    EXPECT_FALSE(emp.bins()[b].gamma.has_value());
    EXPECT_EQ(emp.bins()[b].pairs, 0u);
  }
}

TEST(EmpiricalVariogram, DefaultMaxLagIsHalfDiameter) {
  const PointSet points = PointSet::line(11, 1.0);
  const Eigen::MatrixXd values = Eigen::MatrixXd::Random(3, 11);
  const auto emp = empirical_variogram(points, values, 5);
  EXPECT_DOUBLE_EQ(emp.max_lag(), 5.0);
  std::size_t pairs = 0;
  for (const auto& bin : emp.bins()) pairs += bin.pairs;
  // Pairs at distance 1..5 on an 11-point line: 10 + 9 + 8 + 7 + 6.
  EXPECT_EQ(pairs, 40u);
  for (std::size_t b = 1; b < emp.n_bins(); ++b) {
    EXPECT_GT(emp.bins()[b].lag, emp.bins()[b - 1].lag);
  }
}

TEST(EmpiricalVariogram, ConstantFieldIsZero) {
  const PointSet points = PointSet::from_rows({{0, 0}, {1, 0}, {0, 2}, {3, 1}, {2, 2}});
  const Eigen::MatrixXd values = Eigen::MatrixXd::Constant(7, 5, 4.2);
  const auto emp = empirical_variogram(points, values, 6, 4.0);
  for (const auto& bin : emp.bins()) {
    if (bin.gamma) EXPECT_EQ(*bin.gamma, 0.0);
  }
}

TEST(EmpiricalVariogram, Errors) {
  const PointSet points = PointSet::line(3, 1.0);
  EXPECT_EQ(kind_of([&] { empirical_variogram(points, Eigen::MatrixXd::Zero(2, 4), 3); }),
            ErrorKind::kDimensionMismatch);
  const PointSet same = PointSet::from_rows({{1.0}, {1.0}, {1.0}});
  EXPECT_EQ(kind_of([&] { empirical_variogram(same, Eigen::MatrixXd::Zero(2, 3), 3); }),
            ErrorKind::kDegenerateGeometry);
}

TEST(EmpiricalVariogram, MatchesModelOnSimulatedField) {
  const ModelParams p = make_params(1.5, 0.5, 1.0, 1.0);
  const PointSet points = GridSpec::plane({8, 8}, {0.25, 0.25}).points();
  const auto real = simulate_pinned_field(Variogram::bridging(p), points, 21, 10000);
  const auto emp = empirical_variogram(points, real.values, 12);
  int checked = 0;
  for (const auto& bin : emp.bins()) {
    if (!bin.gamma || bin.lag < 0.3 || bin.lag > 1.0) continue;
    EXPECT_NEAR(*bin.gamma, evaluate(p, bin.lag), 0.05 * evaluate(p, bin.lag));
    ++checked;
  }
  EXPECT_GE(checked, 5);
}

TEST(WlsObjective, ExactFitIsZero) {
  const ModelParams p = make_params(0.9, -0.3, 1.5, 2.0);
  EXPECT_EQ(wls_objective(p, exact_bins(p, log_lags(0.1, 10.0, 12))), 0.0);
}

TEST(WlsObjective, SingleBinPerturbation) {
  const ModelParams p = make_params(1.1, 0.6);
  std::vector<VariogramBin> bins;
  for (double lag : {0.5, 1.0, 2.0, 4.0, 8.0}) bins.push_back({lag, evaluate(p, lag), 30});
  const double delta = 0.125;
  *bins[2].gamma += delta;
  const double model = evaluate(p, 2.0);
  const auto emp = EmpiricalVariogram::make(bins, 8.0);
  EXPECT_NEAR(wls_objective(p, emp), 30.0 * delta * delta / (model * model), 1e-14);
}

TEST(WlsObjective, SkipsEmptyBinsAndNeedsFour) {
  const ModelParams p = make_params(1.0, 1.0);
  std::vector<VariogramBin> bins = {
      {0.5, 0.5, 3}, {1.0, std::nullopt, 0}, {1.5, 1.5, 2}, {2.0, 2.0, 5}, {2.5, std::nullopt, 0}};
  EXPECT_EQ(kind_of([&] { wls_objective(p, EmpiricalVariogram::make(bins, 2.5)); }),
            ErrorKind::kTooFewBins);
  bins.push_back({3.0, 3.0, 1});
  EXPECT_EQ(wls_objective(p, EmpiricalVariogram::make(bins, 3.0)), 0.0);
}

TEST(WlsObjective, TruthBeatsDistantParameters) {
  const ModelParams truth = make_params(1.0, -0.5, 1.0, 1.0);
  const ModelParams distant = make_params(1.8, 1.5, 3.0, 0.3);
  const PointSet points = PointSet::line(40, 0.25);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto real = simulate_pinned_field(Variogram::bridging(truth), points, seed, 500);
    const auto emp = empirical_variogram(points, real.values, 15);
    EXPECT_LT(wls_objective(truth, emp), wls_objective(distant, emp)) << "seed " << seed;
  }
}

TEST(EmpiricalVariogramMake, RejectsBrokenInvariants) {
  EXPECT_THROW(EmpiricalVariogram::make({{1.0, 1.0, 1}, {1.0, 2.0, 1}}, 1.0), Error);
  EXPECT_THROW(EmpiricalVariogram::make({{1.0, -1.0, 1}}, 1.0), Error);
  EXPECT_THROW(EmpiricalVariogram::make({{1.0, std::nullopt, 3}}, 1.0), Error);
  EXPECT_THROW(EmpiricalVariogram::make({}, 1.0), Error);
}

TEST(Transform, RoundTrip) {
  for (double a : {1e-3, 0.1, 0.5, 1.0, 1.5, 1.9, 1.999}) {
    for (double b : {-20.0, -2.0, -1e-9, 0.0, 1e-12, 0.5, 1.0, 1.999}) {
      for (double s : {1e-3, 1.0, 250.0}) {
        const ModelParams p = make_params(a, b, s, 3.5);
        const ModelParams q = from_unconstrained(to_unconstrained(p));
        EXPECT_NEAR(q.alpha(), a, 1e-12);
        EXPECT_NEAR(q.beta(), b, 1e-12);
        EXPECT_NEAR(q.scale(), s, 1e-12 * s);
        EXPECT_NEAR(q.variance(), 3.5, 1e-12 * 3.5);
      }
    }
  }
  // beta = 0 is an interior point of the transformed coordinate.
  EXPECT_TRUE(std::isfinite(to_unconstrained(make_params(1.0, 0.0))[1]));
}

TEST(NelderMead, MinimizesRosenbrock) {
  const auto rosen = [](std::span<const double> x) {
    return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
  };
  const std::vector<double> start = {-1.2, 1.0};
  NelderMeadOptions options;
  options.max_iter = 5000;
  options.tol = 1e-14;
  const auto result = nelder_mead(rosen, start, options);
  EXPECT_TRUE(result.converged);
  EXPECT_NEAR(result.x[0], 1.0, 1e-4);
  EXPECT_NEAR(result.x[1], 1.0, 1e-4);
  EXPECT_LT(result.value, result.initial_value);
}

TEST(NelderMead, TreatsNaNAsInfinity) {
  const auto f = [](std::span<const double> x) {
    return x[0] < -1.0 ? std::numeric_limits<double>::quiet_NaN() : (x[0] - 2.0) * (x[0] - 2.0);
  };
  const std::vector<double> start = {0.0};
  const auto result = nelder_mead(f, start);
  EXPECT_NEAR(result.x[0], 2.0, 1e-4);
}

TEST(Fit, RecoversNoiseFreeParameters) {
  const ModelParams truth = make_params(1.5, -1.0, 2.0, 3.0);
  const auto emp = exact_bins(truth, log_lags(0.05, 50.0, 30));
  const FitResult result = fit(emp);
  EXPECT_LE(result.objective, 1e-8);
  EXPECT_NEAR(result.params.alpha(), 1.5, 0.01);
  EXPECT_NEAR(result.params.beta(), -1.0, 0.02);
  EXPECT_EQ(result.regime, RegimeLabel::kBoundedNonErgodic);
  EXPECT_FALSE(result.boundary_suspect);
}

TEST(Fit, CrossesTheBridgeFromAnyInit) {
  const ModelParams truth = make_params(1.0, 0.0, 1.0, 1.0);
  const auto emp = exact_bins(truth, log_lags(0.05, 50.0, 30));
  const FitResult from_bounded = fit(emp, make_params(1.0, -2.0, 1.0, 1.0));
  EXPECT_LE(from_bounded.objective, 1e-8);
  EXPECT_NEAR(from_bounded.params.beta(), 0.0, 0.02);
}

TEST(Fit, TooFewBins) {
  const ModelParams p = make_params(1.0, 1.0);
  EXPECT_EQ(kind_of([&] { fit(exact_bins(p, {0.5, 1.0, 2.0})); }), ErrorKind::kTooFewBins);
}

TEST(Fit, DeterministicAcrossThreads) {
  const ModelParams truth = make_params(0.8, 0.7, 1.0, 1.0);
  const PointSet points = PointSet::line(30, 0.5);
  const auto real = simulate_pinned_field(Variogram::bridging(truth), points, 4, 300);
  const auto emp = empirical_variogram(points, real.values, 12);
  FitOptions serial;
  serial.threads = 1;
  FitOptions parallel;
  parallel.threads = 4;
  const auto a = fit(emp, std::nullopt, serial);
  const auto b = fit(emp, std::nullopt, parallel);
  EXPECT_EQ(a.params, b.params);
  EXPECT_EQ(a.objective, b.objective);
  EXPECT_EQ(a.start_index, b.start_index);
}

TEST(Fit, MonteCarloRecoveryOfUnboundedModel) {
  const ModelParams truth = make_params(1.0, 1.0, 1.0, 1.0);
  const PointSet points = PointSet::line(60, 0.5);
  const auto real = simulate_pinned_field(Variogram::bridging(truth), points, 2026, 10000);
  const auto emp = empirical_variogram(points, real.values, 20);
  const FitResult result = fit(emp);
  EXPECT_GT(result.params.beta(), 0.0);
  EXPECT_EQ(result.regime, RegimeLabel::kUnboundedMixing);
}

}  // namespace
}  // namespace bridgevario
