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

#include "ranking/generators.h"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "ranking/engines.h"
#include "ranking/instance_io.h"
#include "ranking/oracles.h"
#include "ranking/rng.h"

namespace ranking {
namespace {

using ::testing::ElementsAre;
using ::testing::IsEmpty;

TEST(UpperTriangularTest, BuyerSeesSellersFromItsIndexOn) {
  const BipartiteInstance one = GenUpperTriangular(1);
  EXPECT_EQ(one.NumEdges(), 1);
  const BipartiteInstance two = GenUpperTriangular(2);
  EXPECT_THAT(two.adjacency[0], ElementsAre(0, 1));
  EXPECT_THAT(two.adjacency[1], ElementsAre(1));
  EXPECT_EQ(BruteForceMaxMatching(GenUpperTriangular(3)).objective, 3.0);
  EXPECT_THROW(GenUpperTriangular(0), std::invalid_argument);
}

TEST(UpperTriangularTest, ContainsTheDiagonal) {
  for (int n = 1; n <= 40; ++n) {
    const BipartiteInstance g = GenUpperTriangular(n);
    Matching diagonal;
    for (int i = 0; i < n; ++i) diagonal.pairs.emplace_back(i, i);
    ASSERT_THAT(ValidateMatching(g, diagonal), IsEmpty());
    ASSERT_EQ(g.NumEdges(), n * (n + 1) / 2);
  }
}

TEST(RandomBipartiteTest, ExtremeProbabilities) {
  const BipartiteInstance empty = GenRandomBipartite(5, 4, 0.0, 1);
  EXPECT_EQ(empty.NumEdges(), 0);
  SplitMix64 stream(1);
  EXPECT_TRUE(RunRanking(empty, DrawRanks(stream, 5)).matching.empty());
  const BipartiteInstance full = GenRandomBipartite(5, 4, 1.0, 1);
  EXPECT_EQ(full.NumEdges(), 20);
  EXPECT_EQ(MaxMatchingBipartite(full).objective, 4.0);
  EXPECT_THROW(GenRandomBipartite(2, 2, 1.5, 1), std::invalid_argument);
  EXPECT_THROW(GenRandomBipartite(2, 2, 0.5, 1, WeightRange{0.0, 1.0}),
               std::invalid_argument);
}

TEST(RandomBipartiteTest, SameSeedSameInstance) {
  const auto a = GenRandomBipartite(8, 8, 0.5, 7, WeightRange{1, 1e4});
  const auto b = GenRandomBipartite(8, 8, 0.5, 7, WeightRange{1, 1e4});
  EXPECT_EQ(SerializeInstance(a), SerializeInstance(b));
  const auto c = GenRandomBipartite(8, 8, 0.5, 8, WeightRange{1, 1e4});
  EXPECT_NE(SerializeInstance(a), SerializeInstance(c));
}

TEST(RandomBipartiteTest, WeightsStayInRangeAndSpreadLogUniformly) {
  const auto g = GenRandomBipartite(4000, 1, 0.0, 3, WeightRange{1, 1e4});
  int low_decade = 0;
  for (double w : *g.weights) {
    ASSERT_GE(w, 1.0);
    ASSERT_LE(w, 1e4);
    if (w < 10.0) ++low_decade;
  }
  // A quarter of the mass sits in each decade.
  EXPECT_NEAR(low_decade / 4000.0, 0.25, 0.03);
}

TEST(RandomBipartiteTest, PlantedMatchingIsPerfect) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    for (double p : {0.0, 0.2, 0.5}) {
      const auto g = GenRandomBipartite(9, 9, p, seed, std::nullopt, true);
      ASSERT_EQ(MaxMatchingBipartite(g).objective, 9.0);
      ASSERT_THAT(Validate(g), IsEmpty());
    }
  }
}

TEST(Figure1Test, Shape) {
  const BipartiteInstance g = GenFigure1();
  EXPECT_EQ(g.num_sellers, 2);
  EXPECT_EQ(g.num_buyers, 1);
  EXPECT_EQ(g.Weight(kFigure1Light), 1.0);
  EXPECT_EQ(g.Weight(kFigure1Heavy), 1e10);
  EXPECT_EQ(MaxWeightSellerMatching(g).objective, 1e10);
}

TEST(RandomFullyOnlineTest, ValidAndDeterministic) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 2 + static_cast<int>(seed % 11);
    const FullyOnlineInstance g = GenRandomFullyOnline(n, 0.5, seed);
    ASSERT_THAT(Validate(g), IsEmpty());
    // Timestamps are exactly 1..2n.
    std::vector<std::int64_t> times;
    for (int v = 0; v < n; ++v) {
      times.push_back(g.arrival_time[v].num);
      times.push_back(g.departure_time[v].num);
    }
    std::sort(times.begin(), times.end());
    for (int k = 0; k < 2 * n; ++k) ASSERT_EQ(times[k], k + 1);
    ASSERT_EQ(SerializeInstance(g),
              SerializeInstance(GenRandomFullyOnline(n, 0.5, seed)));
  }
}

TEST(RandomFullyOnlineTest, ExtremeProbabilities) {
  const FullyOnlineInstance none = GenRandomFullyOnline(6, 0.0, 4);
  EXPECT_EQ(none.NumEdges(), 0);
  SplitMix64 stream(2);
  EXPECT_TRUE(
      RunFullyOnlineRanking(none, DrawRanks(stream, 6)).matching.empty());
  // Find a seed whose two intervals overlap; then the optimum is one edge.
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const FullyOnlineInstance pair = GenRandomFullyOnline(2, 1.0, seed);
    if (pair.Overlap(0, 1)) {
      EXPECT_EQ(MaxMatchingGeneral(pair).objective, 1.0);
      return;
    }
  }
  FAIL() << "no overlapping pair among 50 seeds";
}

TEST(DisjointPerfectTest, EveryEngineMatchesAll) {
  BipartiteInstance g = GenDisjointPerfect(10);
  EXPECT_EQ(MaxMatchingBipartite(g).objective, 10.0);
  g.weights = std::vector<double>(10, 2.0);
  SplitMix64 stream(5);
  for (int round = 0; round < 20; ++round) {
    const RankVector x = DrawRanks(stream, 10);
    EXPECT_EQ(RunRanking(g, x).matching.size(), 10);
    EXPECT_EQ(RunEpsRanking(g, x, 0.3).matching.size(), 10);
  }
}

TEST(GeneratorSpecTest, NamesAcceptHyphens) {
  EXPECT_EQ(ParseFamily("upper-triangular"), Family::kUpperTriangular);
  EXPECT_EQ(ParseFamily("random_fully_online"), Family::kRandomFullyOnline);
  EXPECT_EQ(FamilyName(Family::kFigure1), "figure1");
  EXPECT_THROW(ParseFamily("lattice"), std::invalid_argument);
}

TEST(GeneratorSpecTest, JsonRoundTripRegeneratesIdentically) {
  GeneratorSpec spec;
  spec.family = Family::kRandomBipartite;
  spec.n_sellers = 6;
  spec.n_buyers = 5;
  spec.p = 0.35;
  spec.seed = 0xfeedfacecafebeefULL;
  spec.weights = WeightRange{1.0, 1e4};
  spec.plant_perfect_matching = true;
  const GeneratorSpec back = GeneratorSpec::FromJson(spec.ToJson());
  EXPECT_EQ(back, spec);
  EXPECT_EQ(SerializeInstance(Generate(back)),
            SerializeInstance(Generate(spec)));
  EXPECT_THROW(GeneratorSpec::FromJson("{\"n\": 3}"), FormatError);
}

}  // namespace
}  // namespace ranking
