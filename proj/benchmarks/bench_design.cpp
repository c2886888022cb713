// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "aligndof/orchestrator.hpp"

namespace {

using namespace aligndof;

void BM_SampleChannel(benchmark::State& state) {
  const auto cfg = make_config(static_cast<int>(state.range(0)), 2, 6, 6);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_channel(cfg, ++seed));
}
BENCHMARK(BM_SampleChannel)->Arg(2)->Arg(4)->Arg(7);

void BM_DesignAndVerify(benchmark::State& state) {
  const auto cfg = make_config(2, 2, 6, 6);
  const auto plan = make_plan(cfg);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    ++seed;
    const auto channel = sample_channel(cfg, seed);
    const auto design = design_network(cfg, channel, plan, seed);
    benchmark::DoNotOptimize(verify_design(cfg, channel, design));
  }
}
BENCHMARK(BM_DesignAndVerify);

void BM_RandomizedOracles(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    ++seed;
    benchmark::DoNotOptimize(span_collapse_check(4, 2, 2, 8, 2, seed));
    benchmark::DoNotOptimize(stacked_rank_check(3, 1, 1, 4, 4, seed));
  }
}
BENCHMARK(BM_RandomizedOracles);

}  // namespace
