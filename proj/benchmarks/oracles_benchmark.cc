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

#include "ranking/generators.h"
#include "ranking/instance.h"
#include "ranking/oracles.h"

namespace ranking {
namespace {

void BM_HopcroftKarp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BipartiteInstance g = GenRandomBipartite(n, n, 0.1, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(MaxMatchingBipartite(g).objective);
  }
}
BENCHMARK(BM_HopcroftKarp)->RangeMultiplier(4)->Range(16, 1024);

void BM_MaxWeightSellerMatching(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BipartiteInstance g =
      GenRandomBipartite(n, n, 0.2, 9, WeightRange{1, 1e4});
  for (auto _ : state) {
    benchmark::DoNotOptimize(MaxWeightSellerMatching(g).objective);
  }
}
BENCHMARK(BM_MaxWeightSellerMatching)->RangeMultiplier(4)->Range(16, 256);

void BM_GeneralMatchingSmall(benchmark::State& state) {
  const FullyOnlineInstance g = GenRandomFullyOnline(12, 0.5, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(MaxMatchingGeneral(g, 66).objective);
  }
}
BENCHMARK(BM_GeneralMatchingSmall);

}  // namespace
}  // namespace ranking
