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

#include "bridgevario/extremes.hpp"
#include "bridgevario/gaussian_sim.hpp"

namespace bridgevario {
namespace {

void BM_PinnedField(benchmark::State& state) {
  const Variogram v = Variogram::bridging(make_params(1.0, 1.0));
  const PointSet points = PointSet::line(static_cast<std::size_t>(state.range(0)), 0.5);
  SimulationOptions options;
  options.threads = 1;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_pinned_field(v, points, seed++, 1000, options));
  }
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_PinnedField)->Arg(16)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_CirculantLine(benchmark::State& state) {
  const ModelParams p = make_params(2.0, -2.0);
  const GridSpec grid = GridSpec::line(static_cast<std::size_t>(state.range(0)), 0.1);
  SimulationOptions options;
  options.threads = 1;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(circulant_embedding_simulate(p, grid, seed++, 100, options));
  }
  state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_CirculantLine)->Arg(256)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_BrownResnick(benchmark::State& state) {
  const Variogram v = Variogram::bridging(make_params(1.0, 1.0));
  const PointSet points = PointSet::line(static_cast<std::size_t>(state.range(0)), 1.0);
  BrownResnickOptions options;
  options.threads = 1;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_brown_resnick(v, points, seed++, 100, options));
  }
  state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_BrownResnick)->Arg(2)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace bridgevario
