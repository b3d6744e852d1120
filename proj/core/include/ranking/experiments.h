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

// Seeded Monte Carlo campaigns, analytic tail bounds, and the comparison of
// empirical tails against those bounds.

#ifndef RANKING_EXPERIMENTS_H_
#define RANKING_EXPERIMENTS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ranking/engines.h"
#include "ranking/instance.h"
#include "ranking/oracles.h"

namespace ranking {

// Competitive ratios of fully online Ranking taken as given.
inline constexpr double kRhoGeneral = 0.521;
inline constexpr double kRhoBipartite = 0.567;

// 1 - 1/e.
inline constexpr double kRankingRatio = 0.63212055882855767;

// exp(-2 t^2 / sum c_i^2). Throws std::invalid_argument unless t > 0, every
// c_i >= 0 and sum c_i^2 > 0.
double McDiarmidBound(std::span<const double> c, double t);

enum class Theorem {
  kT1,  // Ranking, bipartite
  kT2,  // fully online Ranking
  kT3,  // eps-Ranking with eps = alpha / 2, vertex weighted
};

std::string_view TheoremName(Theorem theorem);
Theorem ParseTheorem(std::string_view name);
Theorem DefaultTheorem(Engine engine);

struct TailParams {
  double alpha = 0.0;
  double n = 0.0;                   // T1, T2: optimum matching size
  double rho = kRhoGeneral;         // T2
  double w_opt = 0.0;               // T3: w(M*)
  double w_norm_sq = 0.0;           // T3: ||w||_2^2
};

struct TailBound {
  double bound = 1.0;      // upper bound on P[objective < threshold]
  double threshold = 0.0;  // guarantee the objective falls short of
};

// T1: exp(-2 a^2 n) at (1 - 1/e - a) n.
// T2: exp(-a^2 n) at (rho - a) n.
// T3: exp(-a^4 w*^2 / (50 ||w||^2)) at (1 - 1/e - a) w*.
// Throws std::invalid_argument on domain violations.
TailBound TheoreticalTail(Theorem theorem, const TailParams& params);

struct EmpiricalDistribution {
  std::vector<double> values;
  std::int64_t trials = 0;
  std::uint64_t master_seed = 0;
  std::string instance_id;
  Engine engine = Engine::kRanking;
  double eps = 0.0;
  // Largest AccountingResidual over all trials.
  double max_accounting_residual = 0.0;
};

struct MonteCarloOptions {
  // 0 picks std::thread::hardware_concurrency().
  int threads = 1;
};

// Trial k runs the engine on DrawRanks(SplitMix64(DeriveSeed(seed, k))).
// values[k] depends only on (instance, engine, eps, seed, k), never on the
// thread schedule.
EmpiricalDistribution MonteCarlo(const Instance& instance, Engine engine,
                                 double eps, std::int64_t trials,
                                 std::uint64_t master_seed,
                                 const MonteCarloOptions& options = {},
                                 std::string instance_id = {});

// Exact E|M| of Ranking by enumerating every seller order. Throws
// std::invalid_argument for other engines, weighted objectives, or more than
// eight sellers.
double ExactExpectationSmall(const BipartiteInstance& instance,
                             Engine engine = Engine::kRanking);

struct TailComparison {
  double alpha = 0.0;
  double threshold = 0.0;
  double empirical_tail = 0.0;
  double ci_upper = 0.0;  // one-sided 99% Wilson upper bound
  double theoretical_bound = 0.0;
  // empirical_tail <= bound, or the excess is not significant.
  bool satisfied = true;
};

std::vector<double> DefaultAlphaGrid();

// `base` supplies n / rho / w_opt / w_norm_sq; alpha is taken from the grid.
std::vector<TailComparison> CompareTail(const EmpiricalDistribution& dist,
                                        Theorem theorem,
                                        const TailParams& base,
                                        std::span<const double> alphas);

struct RatioSummary {
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
  double stddev = 0.0;
  double lower_99 = 0.0;  // mean - z * stderr, one-sided 99%
};

// Throws std::invalid_argument unless oracle_objective > 0.
RatioSummary CompetitiveRatioSummary(const EmpiricalDistribution& dist,
                                     double oracle_objective);

// Sum of w_j^2 over sellers still present.
double WeightNormSquared(const BipartiteInstance& instance);

// One line of the results CSV.
struct ResultRow {
  std::string instance_id;
  Engine engine = Engine::kRanking;
  double eps = 0.0;
  std::uint64_t master_seed = 0;
  std::int64_t trials = 0;
  TailComparison tail;
  double mean_ratio = 0.0;
  double oracle_objective = 0.0;
};

struct ConcentrationRequest {
  std::string instance_id;
  Engine engine = Engine::kRanking;
  // Absent with kEpsRanking means eps = alpha / 2 per grid point.
  std::optional<double> eps;
  std::optional<Theorem> theorem;  // DefaultTheorem(engine) when absent
  std::optional<double> rho;       // by bipartiteness when absent
  std::int64_t trials = 100000;
  std::uint64_t master_seed = 1;
  std::vector<double> alphas = DefaultAlphaGrid();
  int oracle_edge_cap = kDefaultBruteForceEdgeCap;
  MonteCarloOptions monte_carlo;
};

struct ConcentrationResult {
  std::vector<ResultRow> rows;
  double max_accounting_residual = 0.0;
};

// Oracle, Monte Carlo and tail comparison for one instance. Throws
// OracleCapExceeded from the oracle and std::invalid_argument on an empty
// optimum or an engine that does not fit the instance.
ConcentrationResult RunConcentration(const Instance& instance,
                                     const ConcentrationRequest& request);

// Header plus one line per row, columns:
// instance_id,engine,eps,master_seed,trials,alpha,threshold,empirical_tail,
// ci_upper,theoretical_bound,satisfied,mean_ratio,oracle_objective
std::string FormatResultsCsv(std::span<const ResultRow> rows);

// Shortest decimal that round-trips.
std::string FormatDouble(double value);

}  // namespace ranking

#endif  // RANKING_EXPERIMENTS_H_
