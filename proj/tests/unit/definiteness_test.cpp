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

#include "bridgevario/definiteness.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "bridgevario/error.hpp"

namespace bridgevario {
namespace {

std::vector<double> centered_unit_weights(std::mt19937_64& gen, std::size_t n) {
  std::normal_distribution<double> normal;
  std::vector<double> w(n);
  double mean = 0.0;
  for (double& x : w) mean += (x = normal(gen));
  mean /= static_cast<double>(n);
  double norm = 0.0;
  for (double& x : w) norm += (x -= mean) * x;
  for (double& x : w) x /= std::sqrt(norm);
  return w;
}

PointSet random_points(std::mt19937_64& gen, std::size_t n, std::size_t dim) {
  std::uniform_real_distribution<double> coord(-10.0, 10.0);
  std::vector<double> coords(n * dim);
  for (double& c : coords) c = coord(gen);
  return PointSet::from_flat(dim, std::move(coords));
}

TEST(CndQuadraticForm, TwoPointExpansion) {
  const Variogram v = Variogram::bridging(make_params(1.3, 0.4));
  const PointSet points = PointSet::from_rows({{0.0, 0.0}, {3.0, 4.0}});
  const std::vector<double> w = {1.0, -1.0};
  EXPECT_DOUBLE_EQ(cnd_quadratic_form(v, points, w), -2.0 * v(5.0));
}

// The bridging family is conditionally negative definite in every dimension
// and over the whole parameter domain, including beta = 0, beta = 2 and the
// 0 < alpha < beta <= 2 corner.
TEST(CndQuadraticForm, PropertyOverRandomConfigurations) {
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> alpha(0.05, 2.0);
  std::uniform_real_distribution<double> beta(-5.0, 2.0);
  std::uniform_int_distribution<std::size_t> count(3, 12);
  const std::size_t dims[] = {1, 2, 3, 5};
  const std::pair<double, double> pinned[] = {
      {1.3, 1.9}, {2.0, -3.0}, {1.0, 0.0}, {2.0, 2.0}, {0.8, 1.7}, {0.5, 2.0}};
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    double a = alpha(gen);
    double b = beta(gen);
    if (trial < 60) std::tie(a, b) = pinned[trial % 6];
    const Variogram v = Variogram::bridging(make_params(a, b));
    const std::size_t n = count(gen);
    const PointSet points = random_points(gen, n, dims[trial % 4]);
    const auto w = centered_unit_weights(gen, n);
    const double q = cnd_quadratic_form(v, points, w);
    EXPECT_LE(q, 1e-9 * static_cast<double>(n * n))
        << "alpha " << a << " beta " << b << " n " << n;
    ++checked;
  }
  EXPECT_GE(checked, 200);
}

// Negative control: |h|^4 is not a variogram, and the second-difference
// weights expose it.
TEST(CndQuadraticForm, DetectsNonVariogram) {
  const Variogram quartic = Variogram::custom([](double h) { return h * h * h * h; });
  const PointSet points = PointSet::line(3, 1.0);
  const std::vector<double> w = {1.0, -2.0, 1.0};
  EXPECT_DOUBLE_EQ(cnd_quadratic_form(quartic, points, w), 24.0);
}

TEST(CndQuadraticForm, Errors) {
  const Variogram v = Variogram::power(1.0);
  const PointSet points = PointSet::line(3, 1.0);
  const std::vector<double> bad_sum = {1.0, 1.0, -1.0};
  const std::vector<double> short_w = {1.0, -1.0};
  try {
    cnd_quadratic_form(v, points, bad_sum);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kWeightSum);
  }
  try {
    cnd_quadratic_form(v, points, short_w);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDimensionMismatch);
  }
  try {
    PointSet::from_rows({{0.0, 1.0}, {2.0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDimensionMismatch);
  }
}

}  // namespace
}  // namespace bridgevario
