// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "aligndof/dof_plan.hpp"

namespace {

using namespace aligndof;

void BM_Plan(benchmark::State& state) {
  const auto cfg = make_config(static_cast<int>(state.range(0)),
                               static_cast<int>(state.range(1)), 6, 4);
  for (auto _ : state) benchmark::DoNotOptimize(make_plan(cfg));
}
BENCHMARK(BM_Plan)->Args({2, 4})->Args({2, 16})->Args({4, 8})->Args({7, 16});

void BM_Bounds(benchmark::State& state) {
  const auto cfg = make_config(3, 8, 6, 4);
  for (auto _ : state) benchmark::DoNotOptimize(optimal_bounds(cfg));
}
BENCHMARK(BM_Bounds);

}  // namespace
