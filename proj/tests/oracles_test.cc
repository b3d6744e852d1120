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

#include "ranking/oracles.h"

#include <gtest/gtest.h>

#include <cmath>

#include "ranking/engines.h"
#include "ranking/generators.h"
#include "ranking/rng.h"
#include "test_support.h"

namespace ranking {
namespace {

using ::ranking::testing::EdgeSubsetMaxMatchingGeneral;
using ::ranking::testing::HallMaxWeight;
using ::ranking::testing::MakeBipartite;
using ::ranking::testing::MakeFullyOnline;
using ::ranking::testing::SingleEdge;
using ::ranking::testing::SubsetMaxMatching;
using ::ranking::testing::SubsetMaxMatchingGeneral;

double MatchedWeight(const BipartiteInstance& g, const Matching& m) {
  double total = 0.0;
  for (const auto& [j, i] : m.pairs) total += g.Weight(j);
  return total;
}

TEST(MaxMatchingBipartiteTest, SmallCases) {
  EXPECT_EQ(MaxMatchingBipartite(SingleEdge()).objective, 1.0);
  for (int n : {1, 2, 5, 20, 40}) {
    EXPECT_EQ(MaxMatchingBipartite(GenUpperTriangular(n)).objective, n);
  }
  EXPECT_EQ(MaxMatchingBipartite(MakeBipartite(2, 2, {})).objective, 0.0);
}

TEST(MaxMatchingBipartiteTest, AgreesWithSubsetDynamicProgram) {
  SplitMix64 stream(3);
  for (int round = 0; round < 500; ++round) {
    const int ns = 1 + static_cast<int>(stream.NextBelow(8));
    const int nb = 1 + static_cast<int>(stream.NextBelow(8));
    const double p = 0.1 + 0.8 * stream.NextUnit();
    const BipartiteInstance g = GenRandomBipartite(ns, nb, p, stream());
    const OracleResult hk = MaxMatchingBipartite(g);
    ASSERT_EQ(hk.objective, SubsetMaxMatching(g)) << round;
    ASSERT_EQ(hk.objective, BruteForceMaxMatching(g, 64).objective);
    ASSERT_TRUE(ValidateMatching(g, hk.matching).empty());
    ASSERT_EQ(hk.matching.size(), hk.objective);
  }
}

TEST(MaxMatchingBipartiteTest, IgnoresRemovedSellers) {
  const BipartiteInstance g = RemoveSeller(GenUpperTriangular(4), 3);
  EXPECT_EQ(MaxMatchingBipartite(g).objective, 3.0);
}

TEST(BruteForceMaxMatchingTest, SmallCases) {
  EXPECT_EQ(BruteForceMaxMatching(MakeBipartite(3, 3, {})).objective, 0.0);
  EXPECT_EQ(BruteForceMaxMatching(SingleEdge()).objective, 1.0);
  const BipartiteInstance k33 = MakeBipartite(
      3, 3,
      {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}});
  EXPECT_EQ(BruteForceMaxMatching(k33).objective, 3.0);
}

TEST(BruteForceMaxMatchingTest, CapIsEnforced) {
  const BipartiteInstance dense = GenRandomBipartite(6, 6, 1.0, 1);
  EXPECT_THROW(BruteForceMaxMatching(dense), OracleCapExceeded);
  EXPECT_EQ(BruteForceMaxMatching(dense, 36).objective, 6.0);
}

TEST(MaxMatchingGeneralTest, TriangleAndPath) {
  const FullyOnlineInstance triangle = MakeFullyOnline(
      {{1, 4}, {2, 5}, {3, 6}}, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(MaxMatchingGeneral(triangle).objective, 1.0);
  // u-v and v-w overlap; u and w do not.
  const FullyOnlineInstance path =
      MakeFullyOnline({{1, 3}, {2, 6}, {4, 7}}, {{0, 1}, {1, 2}});
  EXPECT_EQ(MaxMatchingGeneral(path).objective, 1.0);
}

TEST(MaxMatchingGeneralTest, NonOverlappingEdgesDoNotCount) {
  const FullyOnlineInstance g =
      MakeFullyOnline({{1, 2}, {3, 4}, {5, 8}, {6, 9}}, {{0, 1}, {2, 3}});
  EXPECT_EQ(MaxMatchingGeneral(g).objective, 1.0);
}

TEST(MaxMatchingGeneralTest, AgreesWithExhaustiveEnumeration) {
  SplitMix64 stream(5);
  int edge_enumerated = 0;
  for (int round = 0; round < 200; ++round) {
    const int n = 2 + static_cast<int>(stream.NextBelow(9));
    const double p = 0.1 + 0.8 * stream.NextUnit();
    const FullyOnlineInstance g = GenRandomFullyOnline(n, p, stream());
    const OracleResult bb = MaxMatchingGeneral(g, 1000);
    ASSERT_EQ(bb.objective, SubsetMaxMatchingGeneral(g)) << round;
    ASSERT_TRUE(ValidateMatching(g, bb.matching).empty());
    ASSERT_EQ(bb.matching.size(), bb.objective);
    try {
      ASSERT_EQ(bb.objective, EdgeSubsetMaxMatchingGeneral(g)) << round;
      ++edge_enumerated;
    } catch (const std::invalid_argument&) {
      // Too many feasible edges for plain subset enumeration.
    }
  }
  EXPECT_GT(edge_enumerated, 100);
}

TEST(MaxMatchingGeneralTest, CapCountsFeasibleEdges) {
  // Complete graph on 12 vertices that are all present together.
  std::vector<std::pair<int, int>> intervals, edges;
  for (int v = 0; v < 12; ++v) intervals.emplace_back(v + 1, 100 + v);
  for (int u = 0; u < 12; ++u) {
    for (int v = u + 1; v < 12; ++v) edges.emplace_back(u, v);
  }
  const FullyOnlineInstance g = MakeFullyOnline(intervals, edges);
  EXPECT_THROW(MaxMatchingGeneral(g), OracleCapExceeded);
  EXPECT_EQ(MaxMatchingGeneral(g, 66).objective, 6.0);
}

TEST(MaxWeightSellerMatchingTest, FigureOne) {
  const OracleResult r = MaxWeightSellerMatching(GenFigure1());
  EXPECT_EQ(r.objective, 1e10);
  ASSERT_EQ(r.matching.size(), 1);
  EXPECT_EQ(r.matching.pairs[0].first, kFigure1Heavy);
}

TEST(MaxWeightSellerMatchingTest, UnitWeightsGiveCardinality) {
  SplitMix64 stream(8);
  for (int round = 0; round < 200; ++round) {
    BipartiteInstance g = GenRandomBipartite(7, 6, 0.35, stream());
    g.weights = std::vector<double>(7, 1.0);
    EXPECT_EQ(MaxWeightSellerMatching(g).objective,
              MaxMatchingBipartite(g).objective);
  }
}

TEST(MaxWeightSellerMatchingTest, AgreesWithHallEnumeration) {
  SplitMix64 stream(13);
  for (int round = 0; round < 500; ++round) {
    const int ns = 1 + static_cast<int>(stream.NextBelow(7));
    const int nb = 1 + static_cast<int>(stream.NextBelow(8));
    const double p = 0.1 + 0.8 * stream.NextUnit();
    const BipartiteInstance g =
        GenRandomBipartite(ns, nb, p, stream(), WeightRange{1, 1e4});
    const OracleResult greedy = MaxWeightSellerMatching(g);
    ASSERT_EQ(greedy.objective, HallMaxWeight(g)) << round;
    ASSERT_TRUE(ValidateMatching(g, greedy.matching).empty());
    ASSERT_NEAR(MatchedWeight(g, greedy.matching), greedy.objective,
                1e-9 * greedy.objective);
  }
}

TEST(MaxWeightSellerMatchingTest, ExpandsCapacities) {
  BipartiteInstance g = MakeBipartite(2, 3, {{0, 0}, {1, 0}, {2, 0}, {2, 1}});
  g.weights = std::vector<double>{5.0, 1.0};
  g.capacities = std::vector<int>{2, 1};
  const OracleResult r = MaxWeightSellerMatching(g);
  EXPECT_EQ(r.objective, 11.0);
  EXPECT_TRUE(ValidateMatching(g, r.matching).empty());
}

TEST(MaxWeightSellerMatchingTest, RequiresWeights) {
  EXPECT_THROW(MaxWeightSellerMatching(GenUpperTriangular(2)),
               std::invalid_argument);
}

// A maximal matching keeps at least half of the optimum.
TEST(OracleTest, EnginesReachHalfTheOptimum) {
  SplitMix64 stream(31);
  for (int round = 0; round < 300; ++round) {
    const BipartiteInstance g = GenRandomBipartite(8, 8, 0.3, stream());
    const double opt = MaxMatchingBipartite(g).objective;
    const double got = RunRanking(g, DrawRanks(stream, 8)).objective;
    ASSERT_GE(2.0 * got, opt);
    const FullyOnlineInstance f = GenRandomFullyOnline(9, 0.4, stream());
    const double fopt = MaxMatchingGeneral(f, 1000).objective;
    const double fgot =
        RunFullyOnlineRanking(f, DrawRanks(stream, 9)).objective;
    ASSERT_GE(2.0 * fgot, fopt);
  }
}

TEST(OracleObjectiveTest, Dispatches) {
  EXPECT_EQ(OracleObjective(GenFigure1(), true), 1e10);
  EXPECT_EQ(OracleObjective(GenFigure1(), false), 1.0);
  EXPECT_EQ(OracleObjective(GenRandomFullyOnline(2, 1.0, 1), false),
            MaxMatchingGeneral(GenRandomFullyOnline(2, 1.0, 1)).objective);
}

}  // namespace
}  // namespace ranking
