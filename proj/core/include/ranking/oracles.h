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

// Exact offline optima used as competitive-ratio denominators.

#ifndef RANKING_ORACLES_H_
#define RANKING_ORACLES_H_

#include <stdexcept>

#include "ranking/instance.h"

namespace ranking {

struct OracleResult {
  Matching matching;
  double objective = 0.0;
};

// Thrown when an exhaustive oracle is asked to search past its edge cap.
class OracleCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultBruteForceEdgeCap = 24;

// Maximum-cardinality matching by Hopcroft-Karp. Capacities are ignored.
OracleResult MaxMatchingBipartite(const BipartiteInstance& instance);

// Maximum matching over the edges whose presence intervals intersect,
// solved exactly by branch and bound. Throws OracleCapExceeded when the
// number of such edges exceeds `edge_cap`.
OracleResult MaxMatchingGeneral(const FullyOnlineInstance& instance,
                                int edge_cap = kDefaultBruteForceEdgeCap);

// Maximum total seller weight. Sellers are scanned by decreasing weight (ties
// to the lower index) and kept iff an augmenting path reaches a free buyer,
// which is exact because matchable seller sets form a transversal matroid.
// Capacities greater than one are honored by expanding sellers into copies.
// Throws std::invalid_argument without weights.
OracleResult MaxWeightSellerMatching(const BipartiteInstance& instance);

// Exhaustive search over edge subsets that form matchings. Throws
// OracleCapExceeded when the instance has more than `edge_cap` edges.
OracleResult BruteForceMaxMatching(const BipartiteInstance& instance,
                                   int edge_cap = kDefaultBruteForceEdgeCap);

// Oracle objective matching the engine's objective: weight for weighted
// engines, cardinality otherwise.
double OracleObjective(const Instance& instance, bool weighted,
                       int edge_cap = kDefaultBruteForceEdgeCap);

}  // namespace ranking

#endif  // RANKING_ORACLES_H_
