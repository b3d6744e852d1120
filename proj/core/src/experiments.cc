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

#include "ranking/experiments.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ranking/rng.h"
#include "ranking/statistics.h"

namespace ranking {
namespace {

void RequirePositive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(std::string(what) + " must be positive");
  }
}

int ResolveThreads(int requested, std::int64_t trials) {
  int threads = requested > 0
                    ? requested
                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(threads, 1);
  return static_cast<int>(
      std::min<std::int64_t>(threads, std::max<std::int64_t>(trials, 1)));
}

}  // namespace

double McDiarmidBound(std::span<const double> c, double t) {
  RequirePositive(t, "t");
  double sum_sq = 0.0;
  for (double ci : c) {
    if (!(ci >= 0.0) || !std::isfinite(ci)) {
      throw std::invalid_argument("difference bounds must be >= 0");
    }
    sum_sq += ci * ci;
  }
  RequirePositive(sum_sq, "sum of squared difference bounds");
  return std::exp(-2.0 * t * t / sum_sq);
}

std::string_view TheoremName(Theorem theorem) {
  switch (theorem) {
    case Theorem::kT1:
      return "T1";
    case Theorem::kT2:
      return "T2";
    case Theorem::kT3:
      return "T3";
  }
  return "unknown";
}

Theorem ParseTheorem(std::string_view name) {
  for (Theorem t : {Theorem::kT1, Theorem::kT2, Theorem::kT3}) {
    if (TheoremName(t) == name) return t;
  }
  throw std::invalid_argument("unknown theorem \"" + std::string(name) +
                              "\" (expected T1, T2 or T3)");
}

Theorem DefaultTheorem(Engine engine) {
  switch (engine) {
    case Engine::kRanking:
      return Theorem::kT1;
    case Engine::kFullyOnline:
      return Theorem::kT2;
    case Engine::kVertexWeighted:
    case Engine::kEpsRanking:
    case Engine::kSingleValued:
      return Theorem::kT3;
  }
  return Theorem::kT1;
}

TailBound TheoreticalTail(Theorem theorem, const TailParams& params) {
  const double a = params.alpha;
  RequirePositive(a, "alpha");
  switch (theorem) {
    case Theorem::kT1:
      if (!(params.n >= 1.0)) throw std::invalid_argument("n must be >= 1");
      return {std::exp(-2.0 * a * a * params.n),
              (kRankingRatio - a) * params.n};
    case Theorem::kT2:
      if (!(params.n >= 1.0)) throw std::invalid_argument("n must be >= 1");
      if (!(params.rho > 0.0 && params.rho <= 1.0)) {
        throw std::invalid_argument("rho must lie in (0, 1]");
      }
      return {std::exp(-a * a * params.n), (params.rho - a) * params.n};
    case Theorem::kT3: {
      RequirePositive(params.w_opt, "w(M*)");
      RequirePositive(params.w_norm_sq, "||w||^2");
      const double exponent = a * a * a * a * params.w_opt * params.w_opt /
                              (50.0 * params.w_norm_sq);
      return {std::exp(-exponent), (kRankingRatio - a) * params.w_opt};
    }
  }
  throw std::invalid_argument("unknown theorem");
}

EmpiricalDistribution MonteCarlo(const Instance& instance, Engine engine,
                                 double eps, std::int64_t trials,
                                 std::uint64_t master_seed,
                                 const MonteCarloOptions& options,
                                 std::string instance_id) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  EmpiricalDistribution dist;
  dist.values.assign(trials, 0.0);
  dist.trials = trials;
  dist.master_seed = master_seed;
  dist.instance_id = std::move(instance_id);
  dist.engine = engine;
  dist.eps = eps;

  const int dimension = RankDimension(instance);
  // Fail on an engine/instance mismatch before any thread starts.
  {
    SplitMix64 probe(DeriveSeed(master_seed, 0));
    RunEngine(instance, engine, DrawRanks(probe, dimension), eps);
  }

  const int threads = ResolveThreads(options.threads, trials);
  std::vector<double> residuals(threads, 0.0);
  auto work = [&](int worker) {
    const std::int64_t begin = trials * worker / threads;
    const std::int64_t end = trials * (worker + 1) / threads;
    for (std::int64_t k = begin; k < end; ++k) {
      SplitMix64 stream(DeriveSeed(master_seed, static_cast<std::uint64_t>(k)));
      const RunRecord run =
          RunEngine(instance, engine, DrawRanks(stream, dimension), eps);
      dist.values[k] = run.objective;
      residuals[worker] = std::max(residuals[worker], AccountingResidual(run));
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (int w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }
  dist.max_accounting_residual =
      *std::max_element(residuals.begin(), residuals.end());
  return dist;
}

double ExactExpectationSmall(const BipartiteInstance& instance,
                             Engine engine) {
  if (engine != Engine::kRanking) {
    throw std::invalid_argument("exact expectation supports ranking only");
  }
  if (instance.num_sellers > 8) {
    throw std::invalid_argument("exact expectation limited to 8 sellers");
  }
  std::vector<int> order(instance.num_sellers);
  std::iota(order.begin(), order.end(), 0);
  std::int64_t total = 0;
  std::int64_t orderings = 0;
  do {
    total += RunRankingPermutation(instance, order).matching.size();
    ++orderings;
  } while (std::next_permutation(order.begin(), order.end()));
  return static_cast<double>(total) / static_cast<double>(orderings);
}

std::vector<double> DefaultAlphaGrid() {
  std::vector<double> grid;
  for (int k = 1; k <= 10; ++k) grid.push_back(0.05 * k);
  return grid;
}

std::vector<TailComparison> CompareTail(const EmpiricalDistribution& dist,
                                        Theorem theorem,
                                        const TailParams& base,
                                        std::span<const double> alphas) {
  if (dist.values.empty()) {
    throw std::invalid_argument("empty distribution");
  }
  std::vector<double> sorted = dist.values;
  std::sort(sorted.begin(), sorted.end());
  const auto trials = static_cast<std::int64_t>(sorted.size());

  std::vector<TailComparison> out;
  out.reserve(alphas.size());
  for (double alpha : alphas) {
    TailParams params = base;
    params.alpha = alpha;
    const TailBound tb = TheoreticalTail(theorem, params);
    const auto below = static_cast<std::int64_t>(
        std::lower_bound(sorted.begin(), sorted.end(), tb.threshold) -
        sorted.begin());
    TailComparison row;
    row.alpha = alpha;
    row.threshold = tb.threshold;
    row.empirical_tail =
        static_cast<double>(below) / static_cast<double>(trials);
    row.ci_upper = WilsonUpper(below, trials);
    row.theoretical_bound = tb.bound;
    // An excess counts only when the whole interval sits above the bound.
    row.satisfied = row.empirical_tail <= row.theoretical_bound ||
                    WilsonLower(below, trials) <= row.theoretical_bound;
    out.push_back(row);
  }
  return out;
}

RatioSummary CompetitiveRatioSummary(const EmpiricalDistribution& dist,
                                     double oracle_objective) {
  RequirePositive(oracle_objective, "oracle objective");
  std::vector<double> ratios(dist.values.size());
  std::transform(dist.values.begin(), dist.values.end(), ratios.begin(),
                 [&](double v) { return v / oracle_objective; });
  const Moments m = ComputeMoments(ratios);
  return {m.mean, m.min, m.max, m.StdDev(), m.mean - kZ99 * m.StdError()};
}

double WeightNormSquared(const BipartiteInstance& instance) {
  double sum = 0.0;
  for (int j = 0; j < instance.num_sellers; ++j) {
    if (!instance.IsRemoved(j)) sum += instance.Weight(j) * instance.Weight(j);
  }
  return sum;
}

ConcentrationResult RunConcentration(const Instance& instance,
                                     const ConcentrationRequest& request) {
  const Engine engine = request.engine;
  const Theorem theorem = request.theorem.value_or(DefaultTheorem(engine));
  const bool weighted = IsWeightedEngine(engine);
  const double oracle =
      OracleObjective(instance, weighted, request.oracle_edge_cap);
  if (!(oracle > 0.0)) {
    throw std::invalid_argument("instance optimum is zero; ratios undefined");
  }

  TailParams base;
  base.n = oracle;
  base.w_opt = oracle;
  if (const auto* g = std::get_if<BipartiteInstance>(&instance)) {
    base.w_norm_sq = WeightNormSquared(*g);
  }
  if (request.rho) {
    base.rho = *request.rho;
  } else if (const auto* g = std::get_if<FullyOnlineInstance>(&instance)) {
    base.rho = IsBipartiteGraph(*g) ? kRhoBipartite : kRhoGeneral;
  }

  ConcentrationResult result;
  auto emit = [&](const EmpiricalDistribution& dist,
                  std::span<const double> alphas) {
    const RatioSummary ratio = CompetitiveRatioSummary(dist, oracle);
    for (const TailComparison& tail :
         CompareTail(dist, theorem, base, alphas)) {
      result.rows.push_back({request.instance_id, engine, dist.eps,
                             request.master_seed, request.trials, tail,
                             ratio.mean, oracle});
    }
    result.max_accounting_residual =
        std::max(result.max_accounting_residual, dist.max_accounting_residual);
  };

  const bool per_alpha_eps = engine == Engine::kEpsRanking && !request.eps;
  if (per_alpha_eps) {
    for (double alpha : request.alphas) {
      const EmpiricalDistribution dist =
          MonteCarlo(instance, engine, alpha / 2.0, request.trials,
                     request.master_seed, request.monte_carlo,
                     request.instance_id);
      emit(dist, std::span<const double>(&alpha, 1));
    }
  } else {
    const EmpiricalDistribution dist =
        MonteCarlo(instance, engine, request.eps.value_or(0.0), request.trials,
                   request.master_seed, request.monte_carlo,
                   request.instance_id);
    emit(dist, request.alphas);
  }
  return result;
}

std::string FormatDouble(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc()) return "nan";
  return std::string(buffer, ptr);
}

std::string FormatResultsCsv(std::span<const ResultRow> rows) {
  std::ostringstream out;
  out << "instance_id,engine,eps,master_seed,trials,alpha,threshold,"
         "empirical_tail,ci_upper,theoretical_bound,satisfied,mean_ratio,"
         "oracle_objective\n";
  for (const ResultRow& r : rows) {
    out << r.instance_id << ',' << EngineName(r.engine) << ','
        << FormatDouble(r.eps) << ',' << r.master_seed << ',' << r.trials
        << ',' << FormatDouble(r.tail.alpha) << ','
        << FormatDouble(r.tail.threshold) << ','
        << FormatDouble(r.tail.empirical_tail) << ','
        << FormatDouble(r.tail.ci_upper) << ','
        << FormatDouble(r.tail.theoretical_bound) << ','
        << (r.tail.satisfied ? "true" : "false") << ','
        << FormatDouble(r.mean_ratio) << ','
        << FormatDouble(r.oracle_objective) << '\n';
  }
  return out.str();
}

}  // namespace ranking
