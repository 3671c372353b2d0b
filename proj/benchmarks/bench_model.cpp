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

#include "bridgevario/model.hpp"
#include "bridgevario/variogram.hpp"

namespace bridgevario {
namespace {

void BM_Evaluate(benchmark::State& state) {
  const ModelParams p = make_params(1.3, static_cast<double>(state.range(0)) / 4.0);
  double lag = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate(p, lag));
    lag = lag < 100.0 ? lag * 1.01 : 0.1;
  }
}
BENCHMARK(BM_Evaluate)->Arg(-8)->Arg(0)->Arg(4)->Arg(6);

void BM_ComposedVariogram(benchmark::State& state) {
  const Variogram v = compose(-1.0, compose(0.5, Variogram::power(1.0)));
  double lag = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(v(lag));
    lag = lag < 100.0 ? lag * 1.01 : 0.1;
  }
}
BENCHMARK(BM_ComposedVariogram);

}  // namespace
}  // namespace bridgevario
