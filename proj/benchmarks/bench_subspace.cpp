// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "aligndof/rng.hpp"
#include "aligndof/subspace.hpp"

namespace {

using namespace aligndof;

CMatrix random_matrix(int rows, int cols, std::uint64_t seed) {
  CMatrix m(rows, cols);
  const std::uint64_t key = rng::derive_key(seed, {1});
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      m(r, c) = rng::complex_normal(key, static_cast<std::uint64_t>(r) * cols + c);
  return m;
}

void BM_NumericalRank(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CMatrix a = random_matrix(n, n + n / 2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(numerical_rank(a));
}
BENCHMARK(BM_NumericalRank)->Arg(8)->Arg(24)->Arg(48)->Arg(96);

void BM_NullSpaceBasis(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CMatrix a = random_matrix(n, n + n / 2, 8);
  for (auto _ : state) benchmark::DoNotOptimize(null_space_basis(a));
}
BENCHMARK(BM_NullSpaceBasis)->Arg(8)->Arg(24)->Arg(48)->Arg(96);

void BM_SpanDim(benchmark::State& state) {
  std::vector<CMatrix> blocks;
  for (std::uint64_t s = 0; s < 8; ++s)
    blocks.push_back(random_matrix(static_cast<int>(state.range(0)), 4, 100 + s));
  for (auto _ : state) benchmark::DoNotOptimize(span_dim(blocks));
}
BENCHMARK(BM_SpanDim)->Arg(12)->Arg(48);

}  // namespace
