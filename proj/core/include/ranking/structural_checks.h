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

// Per-run checks of the structural properties behind the tail bounds:
//
//   L3 / L5   |f(x) - f(x')| <= 1 when one rank changes (bipartite / fully
//             online Ranking).
//   L4 / L6   |M_{-j}| <= |M| <= |M_{-j}| + 1 when vertex j is removed.
//   L7        |f(x) - f(x')| <= (1 + 2/eps) w_{j*} for eps-Ranking.
//   L8        w(M_{-j}) - (2/eps) w_j <= w(M) <= w(M_{-j}) + w_j.
//   L8-utility  every buyer's utility on G is at least its utility on G_{-j}.
//   L9        E[r_j + u_i] >= (1 - 1/e - eps) w_j for an edge {i, j}
//             (statistical).
//
// Cardinality comparisons are exact. Weighted comparisons allow 1e-9
// absolute slack.

#ifndef RANKING_STRUCTURAL_CHECKS_H_
#define RANKING_STRUCTURAL_CHECKS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ranking/engines.h"
#include "ranking/instance.h"

namespace ranking {

enum class LemmaId { kL3, kL4, kL5, kL6, kL7, kL8, kL8Utility, kL9 };

// "L3", ..., "L8", "L8-utility", "L9".
std::string_view LemmaName(LemmaId id);
LemmaId ParseLemma(std::string_view name);

inline constexpr double kWeightedSlack = 1e-9;

struct LemmaReport {
  LemmaId lemma = LemmaId::kL3;
  bool holds = true;
  // Bounded differences: f(x), f(x'). Removal: f(G), f(G_{-j}). Utility: the
  // two utilities of the buyer with the largest drop.
  double f_x = 0.0;
  double f_xprime = 0.0;
  // Width of the allowed band. Two-sided lemmas report the larger side.
  double bound = 0.0;
  double lower_slack = 0.0;  // removal: allowed drop below f(G_{-j})
  double upper_slack = 0.0;  // removal: allowed rise above f(G_{-j})
  int witness_buyer = -1;    // utility check only
  // Largest AccountingResidual over the runs the check performed.
  double max_accounting_residual = 0.0;
};

// Throws std::invalid_argument when the engine is not one of ranking,
// fully_online or eps_ranking, when eps is missing (or non-positive) for
// eps_ranking, when theta is outside [0, 1) or j_star out of range.
LemmaReport CheckBoundedDifference(const Instance& instance, Engine engine,
                                   const RankVector& x, int j_star,
                                   double theta,
                                   std::optional<double> eps = {});

// Runs the engine on G and on RemoveVertex(G, j) with the same ranks.
LemmaReport CheckVertexRemoval(const Instance& instance, Engine engine,
                               const RankVector& x, int j,
                               std::optional<double> eps = {});

// eps-Ranking on G and G_{-j}; holds iff u_i(G) >= u_i(G_{-j}) - 1e-9 for all
// buyers i. Requires weights and eps >= 0.
LemmaReport CheckUtilityMonotonicity(const BipartiteInstance& instance,
                                     const RankVector& x, int j, double eps);

struct EdgeBoundReport {
  double estimate = 0.0;          // mean of r_j + u_i
  double std_error = 0.0;
  double lower_99 = 0.0;          // estimate - z * std_error
  double upper_99 = 0.0;
  double half_width = 0.0;        // z * std_error
  double revenue_estimate = 0.0;  // mean of r_j alone
  double target = 0.0;            // (1 - 1/e - eps) w_j
  // No significant shortfall: upper_99 >= target.
  bool consistent = true;
  // Significant excess: lower_99 >= target.
  bool exceeds = false;
  std::int64_t trials = 0;
  double max_accounting_residual = 0.0;
};

// Monte Carlo estimate of E[r_j + u_i] under eps-Ranking for the edge
// (buyer, seller). Throws std::invalid_argument if the edge is missing, the
// instance is unweighted or trials < 1000.
EdgeBoundReport CheckRevenueUtilityEdgeBound(const BipartiteInstance& instance,
                                             double eps, int buyer, int seller,
                                             std::int64_t trials,
                                             std::uint64_t seed);

// Random case suite.
struct SuiteRow {
  LemmaId lemma = LemmaId::kL3;
  Engine engine = Engine::kRanking;
  std::uint64_t seed = 0;  // per-case seed; the case is rebuilt from it alone
  LemmaReport report;
};

struct SuiteOptions {
  std::int64_t cases = 10000;
  std::uint64_t seed = 1;
  // Used by L7, L8, L8-utility and L9. Empty cycles through {0.1, 0.25, 0.5}.
  std::optional<double> eps;
  int max_side = 12;                       // bipartite sizes in [1, max_side]
  int max_fully_online_vertices = 12;      // fully online sizes in [2, ...]
  std::int64_t edge_bound_trials = 1000;   // L9 trials per case
};

// Cases: Erdos-Renyi bipartite graphs with p in {0.2, 0.5, 0.8}, log-uniform
// weights in [1, 1e4] for the weighted lemmas, random fully online graphs for
// L5/L6. Case c uses seed DeriveSeed(options.seed, c).
std::vector<SuiteRow> RunLemmaSuite(LemmaId lemma,
                                    const SuiteOptions& options);

// CSV with columns lemma_id,engine,seed,holds,f_x,f_xprime,bound.
std::string FormatSuiteCsv(const std::vector<SuiteRow>& rows);

}  // namespace ranking

#endif  // RANKING_STRUCTURAL_CHECKS_H_
