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

// Deterministic Ranking-family engines. Every engine is a pure function of the
// instance and an explicit rank vector (or permutation); sampling happens
// elsewhere.
//
// Revenue/utility accounting: when online vertex i is matched to offline j at
// price p = w_j * exp(x_j - 1 - eps), revenue r_j grows by p and utility u_i is
// set to w_j - p, so each matched edge contributes exactly w_j to
// sum(r) + sum(u). Unweighted engines use w_j = 1 and eps = 0.

#ifndef RANKING_ENGINES_H_
#define RANKING_ENGINES_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ranking/instance.h"

namespace ranking {

enum class Engine {
  kRanking,         // minimum rank among unmatched neighbors
  kFullyOnline,     // matches at departures among present neighbors
  kVertexWeighted,  // eps-Ranking with eps = 0
  kEpsRanking,      // maximizes w_j (1 - exp(x_j - 1 - eps))
  kSingleValued,    // vertex-weighted with capacities, one rank per seller
};

// Names: "ranking", "fully_online", "vertex_weighted", "eps_ranking",
// "single_valued".
std::string_view EngineName(Engine engine);
// Throws std::invalid_argument on an unknown name.
Engine ParseEngine(std::string_view name);
bool IsWeightedEngine(Engine engine);

struct TraceStep {
  int online_vertex = 0;
  std::optional<int> chosen;
  // Departure time of the online vertex (fully online engine only).
  Rational time;
};

struct RunRecord {
  Matching matching;
  double objective = 0.0;
  std::vector<double> revenue;  // indexed by seller / vertex
  std::vector<double> utility;  // indexed by buyer / vertex
  std::vector<TraceStep> trace;
};

// Pure; throws std::invalid_argument if `seller_order` is not a permutation of
// the seller indices. seller_order[0] is the highest-priority seller.
RunRecord RunRankingPermutation(const BipartiteInstance& instance,
                                std::span<const int> seller_order);

// Throws std::invalid_argument if a rank lies outside [0, 1) or the vector
// does not cover every seller. Ties go to the lower seller index.
RunRecord RunRanking(const BipartiteInstance& instance, const RankVector& x);

// Events replayed in timestamp order. At the departure of an unmatched vertex
// i it is matched to the minimum-rank neighbor that has arrived, has not
// departed and is unmatched.
RunRecord RunFullyOnlineRanking(const FullyOnlineInstance& instance,
                                const RankVector& x);

// Requires weights and eps >= 0.
RunRecord RunEpsRanking(const BipartiteInstance& instance, const RankVector& x,
                        double eps);

// Requires weights and capacities. Seller j stays eligible until matched c_j
// times and keeps the same rank for every copy.
RunRecord RunSingleValuedRanking(const BipartiteInstance& instance,
                                 const RankVector& x);

// Dispatch by engine; throws std::invalid_argument when the engine does not
// fit the instance kind. `eps` is read only by kEpsRanking.
RunRecord RunEngine(const Instance& instance, Engine engine,
                    const RankVector& x, double eps = 0.0);

// Score used by the weighted engines, w (1 - exp(x - 1 - eps)), evaluated
// with expm1 so that ranks near 1 keep full relative precision.
double WeightedScore(double weight, double rank, double eps);
// Price w exp(x - 1 - eps).
double Price(double weight, double rank, double eps);

// Number of ranks an engine expects for the instance.
int RankDimension(const Instance& instance);

// Seller order induced by x: sellers sorted by rank, ties by index.
std::vector<int> ArgsortRanks(const RankVector& x);

// |sum(r) + sum(u) - objective|, divided by the objective when it is positive.
double AccountingResidual(const RunRecord& run);

}  // namespace ranking

#endif  // RANKING_ENGINES_H_
