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


#include <benchmark/benchmark.h>

#include "bridgevario/gaussian_sim.hpp"
#include "bridgevario/inference.hpp"

namespace bridgevario {
namespace {

struct Dataset {
  PointSet points;
  Eigen::MatrixXd values;
};

const Dataset& dataset() {
  static const Dataset data = [] {
    const PointSet points = PointSet::line(60, 0.5);
    auto real = simulate_pinned_field(Variogram::bridging(make_params(1.0, -0.5)), points, 1, 2000);
    return Dataset{points, std::move(real.values)};
  }();
  return data;
}

void BM_EmpiricalVariogram(benchmark::State& state) {
  const Dataset& data = dataset();
  for (auto _ : state) {
    benchmark::DoNotOptimize(empirical_variogram(data.points, data.values, 20));
  }
}
BENCHMARK(BM_EmpiricalVariogram)->Unit(benchmark::kMillisecond);

void BM_Fit(benchmark::State& state) {
  const auto emp = empirical_variogram(dataset().points, dataset().values, 20);
  FitOptions options;
  options.threads = 1;
  options.multistart_count = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fit(emp, std::nullopt, options));
  }
}
BENCHMARK(BM_Fit)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace bridgevario
