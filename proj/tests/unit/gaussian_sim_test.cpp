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

#include "bridgevario/gaussian_sim.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "bridgevario/error.hpp"
#include "bridgevario/inference.hpp"

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

struct MeanAndError {
  double mean;
  double std_error;
};

// Mean of per-replicate statistics, with the standard error across
// (independent) replicates.
template <typename Stat>
MeanAndError replicate_mean(const Eigen::MatrixXd& values, Stat stat) {
  const auto reps = values.rows();
  double s1 = 0.0, s2 = 0.0;
  for (Eigen::Index r = 0; r < reps; ++r) {
    const double x = stat(values.row(r));
    s1 += x;
    s2 += x * x;
  }
  const double mean = s1 / reps;
  const double var = (s2 / reps - mean * mean) * reps / (reps - 1.0);
  return {mean, std::sqrt(var / reps)};
}

TEST(PinnedCovariance, OriginOnly) {
  const auto k = pinned_covariance_matrix(Variogram::power(1.0),
                                          PointSet::from_rows({{0.0, 0.0}}));
  ASSERT_EQ(k.rows(), 1);
  EXPECT_EQ(k(0, 0), 0.0);
}

TEST(PinnedCovariance, OriginAndOnePoint) {
  const Variogram v = Variogram::bridging(make_params(1.5, -1.0));
  const auto k = pinned_covariance_matrix(v, PointSet::from_rows({{0.0}, {2.0}}));
  EXPECT_EQ(k(0, 0), 0.0);
  EXPECT_EQ(k(0, 1), 0.0);
  EXPECT_EQ(k(1, 0), 0.0);
  EXPECT_DOUBLE_EQ(k(1, 1), 2.0 * v(2.0));
}

TEST(PinnedCovariance, QuadraticPowerModel) {
  const auto k = pinned_covariance_matrix(Variogram::power(2.0),
                                          PointSet::from_rows({{1.0}, {2.0}}));
  EXPECT_DOUBLE_EQ(k(0, 0), 2.0);
  EXPECT_DOUBLE_EQ(k(1, 1), 8.0);
  EXPECT_DOUBLE_EQ(k(0, 1), 4.0);
  EXPECT_DOUBLE_EQ(k(1, 0), 4.0);
  // Var(Z(2) - Z(1)) = 8 + 2 - 2 * 4 = 2 * gamma(1).
  EXPECT_DOUBLE_EQ(k(1, 1) + k(0, 0) - 2.0 * k(0, 1), 2.0);
}

TEST(CholeskyWithJitter, Identity) {
  const auto chol = cholesky_with_jitter(Eigen::MatrixXd::Identity(4, 4));
  EXPECT_EQ(chol.jitter, 0.0);
  EXPECT_TRUE(chol.lower.isIdentity(0.0));
}

TEST(CholeskyWithJitter, SlightlyIndefiniteNeedsJitter) {
  Eigen::MatrixXd k(2, 2);
  k << 1, 1, 1, 1 - 1e-12;
  const auto chol = cholesky_with_jitter(k);
  EXPECT_GT(chol.jitter, 0.0);
  EXPECT_LE(chol.jitter, 1e-6 * k.trace() / 2.0);
  const Eigen::MatrixXd rebuilt = chol.lower * chol.lower.transpose();
  const Eigen::MatrixXd shifted = k + chol.jitter * Eigen::MatrixXd::Identity(2, 2);
  EXPECT_LT((rebuilt - shifted).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(CholeskyWithJitter, IndefiniteFails) {
  Eigen::MatrixXd k(2, 2);
  k << 1, 2, 2, 1;
  EXPECT_EQ(kind_of([&] { cholesky_with_jitter(k); }), ErrorKind::kNotPSD);
  Eigen::MatrixXd bad(1, 1);
  bad << std::nan("");
  EXPECT_EQ(kind_of([&] { cholesky_with_jitter(bad); }), ErrorKind::kNonFinite);
}

TEST(SimulatePinned, OriginIsExactlyZero) {
  const Variogram v = Variogram::bridging(make_params(1.0, 1.0));
  const auto single = simulate_pinned_field(v, PointSet::from_rows({{0.0}}), 5, 100);
  EXPECT_TRUE(single.values.isZero(0.0));

  const auto line = simulate_pinned_field(v, PointSet::line(20, 0.5), 5, 200);
  EXPECT_TRUE(line.values.col(0).isZero(0.0));
  EXPECT_GT(line.values.col(1).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ(line.seed, 5u);
}

TEST(SimulatePinned, IncrementVarianceAtUnitLag) {
  const Variogram v = Variogram::bridging(make_params(1.0, 1.0));
  const auto real = simulate_pinned_field(v, PointSet::line(2, 1.0), 17, 100000);
  const double var = real.values.col(1).squaredNorm() / 100000.0;
  EXPECT_GE(var, 1.97);
  EXPECT_LE(var, 2.03);
}

TEST(SimulatePinned, IncrementVarianceLawAllRegimes) {
  for (const auto& p : {make_params(1.0, 1.0), make_params(2.0, -2.0),
                        make_params(1.5, 0.0), make_params(0.6, 1.8, 2.0, 0.5)}) {
    const Variogram v = Variogram::bridging(p);
    const PointSet points = PointSet::from_rows(
        {{0.0, 0.0}, {1.0, 0.5}, {-2.0, 1.0}, {3.0, -3.0}, {0.25, 0.0}});
    const auto real = simulate_pinned_field(v, points, 99, 20000);
    for (std::size_t i = 0; i < points.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        const double target = 2.0 * v(points.distance(i, j));
        const auto est = replicate_mean(real.values, [&](const auto& row) {
          const double d = row(i) - row(j);
          return d * d;
        });
        EXPECT_NEAR(est.mean, target, 4.0 * est.std_error)
            << p.alpha() << "," << p.beta() << " pair " << i << "," << j;
      }
    }
  }
}

TEST(SimulatePinned, MatheronMatchesModelForCauchy) {
  const ModelParams p = make_params(2.0, -2.0);
  const PointSet points = PointSet::line(50, 0.0625);
  const auto real = simulate_pinned_field(Variogram::bridging(p), points, 3, 20000);
  const auto emp = empirical_variogram(points, real.values, 40, 2.5);
  int checked = 0;
  for (const auto& bin : emp.bins()) {
    if (!bin.gamma || bin.lag < 0.5 || bin.lag > 2.0) continue;
    EXPECT_NEAR(*bin.gamma, evaluate(p, bin.lag), 0.05 * evaluate(p, bin.lag))
        << "lag " << bin.lag;
    ++checked;
  }
  EXPECT_GE(checked, 20);
}

TEST(SimulatePinned, DeterministicAcrossThreadCounts) {
  const Variogram v = Variogram::bridging(make_params(1.2, 0.3));
  const PointSet points = PointSet::line(30, 0.3);
  SimulationOptions serial;
  serial.threads = 1;
  SimulationOptions parallel;
  parallel.threads = 4;
  const auto a = simulate_pinned_field(v, points, 123, 257, serial);
  const auto b = simulate_pinned_field(v, points, 123, 257, parallel);
  const auto c = simulate_pinned_field(v, points, 123, 257, serial);
  EXPECT_TRUE((a.values.array() == b.values.array()).all());
  EXPECT_TRUE((a.values.array() == c.values.array()).all());
  const auto other = simulate_pinned_field(v, points, 124, 257, serial);
  EXPECT_FALSE((a.values.array() == other.values.array()).all());
}

TEST(SimulatePinned, GaussianMargins) {
  const Variogram v = Variogram::bridging(make_params(1.7, -0.5));
  const auto real = simulate_pinned_field(v, PointSet::line(4, 0.7), 77, 100000);
  for (Eigen::Index i = 1; i < 4; ++i) {
    const Eigen::ArrayXd z = real.values.col(i).array();
    const double sd = std::sqrt(z.square().mean());
    const Eigen::ArrayXd s = z / sd;
    EXPECT_LT(std::abs(s.cube().mean()), 0.05);
    EXPECT_LT(std::abs(s.square().square().mean() - 3.0), 0.1);
  }
}

TEST(SimulatePinned, SizeCap) {
  SimulationOptions options;
  options.max_points = 10;
  EXPECT_EQ(kind_of([&] {
              simulate_pinned_field(Variogram::power(1.0), PointSet::line(11, 1.0), 0, 1,
                                    options);
            }),
            ErrorKind::kSizeCap);
}

TEST(SimulatePinned, CoincidentPointsUseJitter) {
  const Variogram v = Variogram::bridging(make_params(1.0, 1.0));
  const PointSet points = PointSet::from_rows({{1.0}, {1.0}, {2.0}});
  const auto real = simulate_pinned_field(v, points, 1, 1000);
  EXPECT_LT((real.values.col(0) - real.values.col(1)).cwiseAbs().maxCoeff(), 1e-3);
}

TEST(Circulant, RejectsUnboundedRegime) {
  EXPECT_EQ(kind_of([] {
              circulant_embedding_simulate(make_params(1.0, 0.0), GridSpec::line(8, 1.0), 0, 1);
            }),
            ErrorKind::kRegime);
  EXPECT_EQ(kind_of([] {
              circulant_embedding_simulate(make_params(1.0, 0.5), GridSpec::line(8, 1.0), 0, 1);
            }),
            ErrorKind::kRegime);
}

TEST(Circulant, CauchyLineMatchesCovariance) {
  const ModelParams p = make_params(2.0, -2.0);
  EmbeddingInfo info;
  const auto real =
      circulant_embedding_simulate(p, GridSpec::line(256, 0.1), 2, 10000, {}, &info);
  ASSERT_EQ(real.values.cols(), 256);
  EXPECT_GE(info.padding, 2u);
  EXPECT_NEAR(info.variance, 2.0, 0.02);

  const auto var0 = replicate_mean(real.values, [](const auto& row) {
    return row.squaredNorm() / static_cast<double>(row.size());
  });
  EXPECT_NEAR(var0.mean, sill(p), 0.02 * sill(p));

  const auto cov1 = replicate_mean(real.values, [](const auto& row) {
    const auto n = row.size();
    return row.head(n - 1).dot(row.tail(n - 1)) / static_cast<double>(n - 1);
  });
  EXPECT_NEAR(cov1.mean, covariance(p, 0.1), 3.0 * cov1.std_error);
}

TEST(Circulant, PlaneGrid) {
  const ModelParams p = make_params(1.0, -1.0, 2.0, 1.0);
  const GridSpec grid = GridSpec::plane({16, 12}, {0.5, 0.25});
  const auto real = circulant_embedding_simulate(p, grid, 8, 4000);
  ASSERT_EQ(real.values.cols(), 16 * 12);
  ASSERT_EQ(real.points.dim(), 2u);
  const auto var0 = replicate_mean(real.values, [](const auto& row) {
    return row.squaredNorm() / static_cast<double>(row.size());
  });
  EXPECT_NEAR(var0.mean, sill(p), 4.0 * var0.std_error);
  // Neighbours along the second axis (flat index + 1) are 0.25 apart.
  const auto cov = replicate_mean(real.values, [](const auto& row) {
    double s = 0.0;
    int count = 0;
    for (int i0 = 0; i0 < 16; ++i0) {
      for (int i1 = 0; i1 + 1 < 12; ++i1) {
        s += row(i0 * 12 + i1) * row(i0 * 12 + i1 + 1);
        ++count;
      }
    }
    return s / count;
  });
  EXPECT_NEAR(cov.mean, covariance(p, 0.25), 4.0 * cov.std_error);
}

TEST(Circulant, DeterministicAcrossThreadCounts) {
  const ModelParams p = make_params(1.5, -1.0);
  SimulationOptions serial;
  serial.threads = 1;
  SimulationOptions parallel;
  parallel.threads = 3;
  const auto a = circulant_embedding_simulate(p, GridSpec::line(64, 0.2), 5, 50, serial);
  const auto b = circulant_embedding_simulate(p, GridSpec::line(64, 0.2), 5, 50, parallel);
  EXPECT_TRUE((a.values.array() == b.values.array()).all());
}

}  // namespace
}  // namespace bridgevario
