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

#ifndef RANKING_GENERATORS_H_
#define RANKING_GENERATORS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "ranking/instance.h"

namespace ranking {

// Buyer i is adjacent to sellers {i, ..., n-1}; arrivals in index order.
// Throws std::invalid_argument for n < 1.
BipartiteInstance GenUpperTriangular(int n);

struct WeightRange {
  double min = 1.0;
  double max = 1.0;
};

// Each (buyer, seller) pair is an edge independently with probability p.
// Weights, when requested, are log-uniform in the range. With
// `plant_perfect_matching`, a random perfect matching between the first
// min(n_sellers, n_buyers) buyers and a random seller subset is added on top.
BipartiteInstance GenRandomBipartite(int n_sellers, int n_buyers, double p,
                                     std::uint64_t seed,
                                     std::optional<WeightRange> weights = {},
                                     bool plant_perfect_matching = false);

// Sellers j (weight 1) and j' (weight 1e10), one buyer adjacent to both.
// Seller 0 is j, seller 1 is j'.
BipartiteInstance GenFigure1();

inline constexpr int kFigure1Light = 0;
inline constexpr int kFigure1Heavy = 1;

// n vertices on integer timestamps 1..2n: a shuffled multiset holding each
// vertex twice, first occurrence = arrival, second = departure. Each pair is
// an edge independently with probability p. Throws for n < 2 or p outside
// [0, 1].
FullyOnlineInstance GenRandomFullyOnline(int n, double p, std::uint64_t seed);

// n disjoint edges buyer i -- seller i.
BipartiteInstance GenDisjointPerfect(int n);

enum class Family {
  kUpperTriangular,
  kRandomBipartite,
  kFigure1,
  kRandomFullyOnline,
  kDisjointPerfect,
};

// Accepts "upper_triangular" and "upper-triangular" spellings.
Family ParseFamily(std::string_view name);
std::string_view FamilyName(Family family);

struct GeneratorSpec {
  Family family = Family::kUpperTriangular;
  // upper_triangular, disjoint_perfect, random_fully_online
  int n = 0;
  int n_sellers = 0;   // random_bipartite
  int n_buyers = 0;    // random_bipartite
  double p = 0.0;
  std::uint64_t seed = 0;
  std::optional<WeightRange> weights;
  bool plant_perfect_matching = false;

  // Compact JSON object; only fields relevant to the family are written.
  std::string ToJson() const;
  static GeneratorSpec FromJson(std::string_view json_text);

  friend bool operator==(const GeneratorSpec& a, const GeneratorSpec& b);
};

Instance Generate(const GeneratorSpec& spec);

}  // namespace ranking

#endif  // RANKING_GENERATORS_H_
