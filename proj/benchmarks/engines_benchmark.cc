// Copyright 2026 The Ranking Concentration Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cstdint>

#include "ranking/engines.h"
#include "ranking/experiments.h"
#include "ranking/generators.h"
#include "ranking/instance.h"
#include "ranking/rng.h"

namespace ranking {
namespace {

void BM_RankingUpperTriangular(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BipartiteInstance g = GenUpperTriangular(n);
  SplitMix64 stream(1);
  for (auto _ : state) {
    const RankVector x = DrawRanks(stream, n);
    benchmark::DoNotOptimize(RunRanking(g, x).objective);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_RankingUpperTriangular)->RangeMultiplier(2)->Range(16, 1024)
    ->Complexity();

void BM_RankingRandomDense(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BipartiteInstance g = GenRandomBipartite(n, n, 0.5, 7);
  SplitMix64 stream(2);
  for (auto _ : state) {
    const RankVector x = DrawRanks(stream, n);
    benchmark::DoNotOptimize(RunRanking(g, x).objective);
  }
}
BENCHMARK(BM_RankingRandomDense)->RangeMultiplier(4)->Range(16, 1024);

void BM_EpsRankingWeighted(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BipartiteInstance g =
      GenRandomBipartite(n, n, 0.3, 11, WeightRange{1, 1e4}, true);
  SplitMix64 stream(3);
  for (auto _ : state) {
    const RankVector x = DrawRanks(stream, n);
    benchmark::DoNotOptimize(RunEpsRanking(g, x, 0.1).objective);
  }
}
BENCHMARK(BM_EpsRankingWeighted)->RangeMultiplier(4)->Range(16, 1024);

void BM_FullyOnlineRanking(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FullyOnlineInstance g = GenRandomFullyOnline(n, 0.3, 5);
  SplitMix64 stream(4);
  for (auto _ : state) {
    const RankVector x = DrawRanks(stream, n);
    benchmark::DoNotOptimize(RunFullyOnlineRanking(g, x).objective);
  }
}
BENCHMARK(BM_FullyOnlineRanking)->RangeMultiplier(4)->Range(16, 1024);

// Throughput of the seeded trial loop, including rank generation.
void BM_MonteCarloTrials(benchmark::State& state) {
  const BipartiteInstance g = GenUpperTriangular(40);
  const int trials = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        MonteCarlo(g, Engine::kRanking, 0.0, trials, seed++).values.data());
  }
  state.SetItemsProcessed(state.iterations() * trials);
}
BENCHMARK(BM_MonteCarloTrials)->Arg(10000);

}  // namespace
}  // namespace ranking
