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

#include "ranking/structural_checks.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ranking/experiments.h"
#include "ranking/generators.h"
#include "ranking/rng.h"
#include "ranking/statistics.h"

namespace ranking {
namespace {

constexpr std::array<double, 3> kEdgeProbabilities = {0.2, 0.5, 0.8};
constexpr std::array<double, 3> kSuiteEps = {0.1, 0.25, 0.5};

// Validates the engine/eps combination shared by the bounded-difference and
// removal checks and returns the eps to run with.
double ResolveEps(const Instance& instance, Engine engine,
                  std::optional<double> eps) {
  switch (engine) {
    case Engine::kRanking:
      if (!std::holds_alternative<BipartiteInstance>(instance)) {
        throw std::invalid_argument("ranking check needs a bipartite instance");
      }
      if (eps) throw std::invalid_argument("eps only applies to eps_ranking");
      return 0.0;
    case Engine::kFullyOnline:
      if (!std::holds_alternative<FullyOnlineInstance>(instance)) {
        throw std::invalid_argument(
            "fully_online check needs a fully online instance");
      }
      if (eps) throw std::invalid_argument("eps only applies to eps_ranking");
      return 0.0;
    case Engine::kEpsRanking: {
      const auto* g = std::get_if<BipartiteInstance>(&instance);
      if (g == nullptr || !g->weights) {
        throw std::invalid_argument(
            "eps_ranking check needs a weighted bipartite instance");
      }
      if (!eps || !(*eps > 0.0) || !std::isfinite(*eps)) {
        throw std::invalid_argument("eps_ranking check needs eps > 0");
      }
      return *eps;
    }
    case Engine::kVertexWeighted:
    case Engine::kSingleValued:
      break;
  }
  throw std::invalid_argument("no structural check for engine " +
                              std::string(EngineName(engine)));
}

void CheckIndex(const Instance& instance, int v) {
  if (v < 0 || v >= RankDimension(instance)) {
    throw std::invalid_argument("vertex index " + std::to_string(v) +
                                " out of range");
  }
}

double SellerWeight(const Instance& instance, int j) {
  return std::get<BipartiteInstance>(instance).Weight(j);
}

BipartiteInstance SuiteBipartite(SplitMix64& stream, int max_side,
                                 bool weighted) {
  const int ns = 1 + static_cast<int>(stream.NextBelow(max_side));
  const int nb = 1 + static_cast<int>(stream.NextBelow(max_side));
  const double p = kEdgeProbabilities[stream.NextBelow(3)];
  std::optional<WeightRange> weights;
  if (weighted) weights = WeightRange{1.0, 1e4};
  return GenRandomBipartite(ns, nb, p, stream(), weights);
}

FullyOnlineInstance SuiteFullyOnline(SplitMix64& stream, int max_vertices) {
  const int n = 2 + static_cast<int>(stream.NextBelow(max_vertices - 1));
  const double p = kEdgeProbabilities[stream.NextBelow(3)];
  return GenRandomFullyOnline(n, p, stream());
}

Engine LemmaEngine(LemmaId lemma) {
  switch (lemma) {
    case LemmaId::kL3:
    case LemmaId::kL4:
      return Engine::kRanking;
    case LemmaId::kL5:
    case LemmaId::kL6:
      return Engine::kFullyOnline;
    default:
      return Engine::kEpsRanking;
  }
}

}  // namespace

std::string_view LemmaName(LemmaId id) {
  switch (id) {
    case LemmaId::kL3:
      return "L3";
    case LemmaId::kL4:
      return "L4";
    case LemmaId::kL5:
      return "L5";
    case LemmaId::kL6:
      return "L6";
    case LemmaId::kL7:
      return "L7";
    case LemmaId::kL8:
      return "L8";
    case LemmaId::kL8Utility:
      return "L8-utility";
    case LemmaId::kL9:
      return "L9";
  }
  return "unknown";
}

LemmaId ParseLemma(std::string_view name) {
  for (LemmaId id : {LemmaId::kL3, LemmaId::kL4, LemmaId::kL5, LemmaId::kL6,
                     LemmaId::kL7, LemmaId::kL8, LemmaId::kL8Utility,
                     LemmaId::kL9}) {
    if (LemmaName(id) == name) return id;
  }
  throw std::invalid_argument("unknown lemma \"" + std::string(name) + "\"");
}

LemmaReport CheckBoundedDifference(const Instance& instance, Engine engine,
                                   const RankVector& x, int j_star,
                                   double theta, std::optional<double> eps) {
  const double run_eps = ResolveEps(instance, engine, eps);
  CheckIndex(instance, j_star);
  if (!(theta >= 0.0 && theta < 1.0)) {
    throw std::invalid_argument("theta must lie in [0, 1)");
  }
  RankVector x_prime = x;
  x_prime.values.at(j_star) = theta;
  const RunRecord run = RunEngine(instance, engine, x, run_eps);
  const RunRecord run_prime = RunEngine(instance, engine, x_prime, run_eps);

  LemmaReport report;
  report.f_x = run.objective;
  report.f_xprime = run_prime.objective;
  report.max_accounting_residual =
      std::max(AccountingResidual(run), AccountingResidual(run_prime));
  const double diff = std::abs(report.f_x - report.f_xprime);
  if (engine == Engine::kEpsRanking) {
    report.lemma = LemmaId::kL7;
    report.bound = (1.0 + 2.0 / run_eps) * SellerWeight(instance, j_star);
    report.holds = diff <= report.bound + kWeightedSlack;
  } else {
    report.lemma = engine == Engine::kRanking ? LemmaId::kL3 : LemmaId::kL5;
    report.bound = 1.0;
    report.holds = diff <= report.bound;
  }
  report.lower_slack = report.upper_slack = report.bound;
  return report;
}

LemmaReport CheckVertexRemoval(const Instance& instance, Engine engine,
                               const RankVector& x, int j,
                               std::optional<double> eps) {
  const double run_eps = ResolveEps(instance, engine, eps);
  CheckIndex(instance, j);
  const Instance reduced = RemoveVertex(instance, j);
  const RunRecord run = RunEngine(instance, engine, x, run_eps);
  const RunRecord run_minus = RunEngine(reduced, engine, x, run_eps);

  LemmaReport report;
  report.f_x = run.objective;
  report.f_xprime = run_minus.objective;
  report.max_accounting_residual =
      std::max(AccountingResidual(run), AccountingResidual(run_minus));
  if (engine == Engine::kEpsRanking) {
    const double w = SellerWeight(instance, j);
    report.lemma = LemmaId::kL8;
    report.lower_slack = 2.0 / run_eps * w;
    report.upper_slack = w;
    report.holds =
        report.f_x >= report.f_xprime - report.lower_slack - kWeightedSlack &&
        report.f_x <= report.f_xprime + report.upper_slack + kWeightedSlack;
  } else {
    report.lemma = engine == Engine::kRanking ? LemmaId::kL4 : LemmaId::kL6;
    report.lower_slack = 0.0;
    report.upper_slack = 1.0;
    report.holds = report.f_xprime <= report.f_x &&
                   report.f_x <= report.f_xprime + 1.0;
  }
  report.bound = std::max(report.lower_slack, report.upper_slack);
  return report;
}

LemmaReport CheckUtilityMonotonicity(const BipartiteInstance& instance,
                                     const RankVector& x, int j, double eps) {
  // No 2/eps term here, so eps = 0 is admissible.
  if (!instance.weights) {
    throw std::invalid_argument(
        "utility check needs a weighted bipartite instance");
  }
  if (!(eps >= 0.0) || !std::isfinite(eps)) {
    throw std::invalid_argument("utility check needs finite eps >= 0");
  }
  const Instance wrapped = instance;
  CheckIndex(wrapped, j);
  const BipartiteInstance reduced = RemoveSeller(instance, j);
  const RunRecord run = RunEpsRanking(instance, x, eps);
  const RunRecord run_minus = RunEpsRanking(reduced, x, eps);

  LemmaReport report;
  report.lemma = LemmaId::kL8Utility;
  report.bound = kWeightedSlack;
  report.max_accounting_residual =
      std::max(AccountingResidual(run), AccountingResidual(run_minus));
  double worst_drop = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < instance.num_buyers; ++i) {
    const double drop = run_minus.utility[i] - run.utility[i];
    if (drop > worst_drop) {
      worst_drop = drop;
      report.witness_buyer = i;
      report.f_x = run.utility[i];
      report.f_xprime = run_minus.utility[i];
    }
    if (run.utility[i] < run_minus.utility[i] - kWeightedSlack) {
      report.holds = false;
    }
  }
  return report;
}

EdgeBoundReport CheckRevenueUtilityEdgeBound(const BipartiteInstance& instance,
                                             double eps, int buyer, int seller,
                                             std::int64_t trials,
                                             std::uint64_t seed) {
  if (!instance.weights) {
    throw std::invalid_argument("edge bound check needs weights");
  }
  if (!(eps >= 0.0) || !std::isfinite(eps)) {
    throw std::invalid_argument("eps must be >= 0");
  }
  if (trials < 1000) throw std::invalid_argument("trials must be >= 1000");
  if (buyer < 0 || buyer >= instance.num_buyers || seller < 0 ||
      seller >= instance.num_sellers ||
      !std::binary_search(instance.adjacency[buyer].begin(),
                          instance.adjacency[buyer].end(), seller)) {
    throw std::invalid_argument("edge (" + std::to_string(buyer) + ", " +
                                std::to_string(seller) +
                                ") not in instance");
  }
  std::vector<double> sums(trials);
  std::vector<double> revenues(trials);
  EdgeBoundReport report;
  report.trials = trials;
  for (std::int64_t k = 0; k < trials; ++k) {
    SplitMix64 stream(DeriveSeed(seed, static_cast<std::uint64_t>(k)));
    const RunRecord run = RunEpsRanking(
        instance, DrawRanks(stream, instance.num_sellers), eps);
    revenues[k] = run.revenue[seller];
    sums[k] = run.revenue[seller] + run.utility[buyer];
    report.max_accounting_residual =
        std::max(report.max_accounting_residual, AccountingResidual(run));
  }
  const Moments m = ComputeMoments(sums);
  report.estimate = m.mean;
  report.std_error = m.StdError();
  report.half_width = kZ99 * report.std_error;
  report.lower_99 = report.estimate - report.half_width;
  report.upper_99 = report.estimate + report.half_width;
  report.revenue_estimate = ComputeMoments(revenues).mean;
  report.target = (kRankingRatio - eps) * instance.Weight(seller);
  report.consistent = report.upper_99 >= report.target;
  report.exceeds = report.lower_99 >= report.target;
  return report;
}

std::vector<SuiteRow> RunLemmaSuite(LemmaId lemma,
                                    const SuiteOptions& options) {
  if (options.cases < 1) throw std::invalid_argument("cases must be >= 1");
  if (options.max_side < 1 || options.max_fully_online_vertices < 2) {
    throw std::invalid_argument("suite sizes too small");
  }
  const Engine engine = LemmaEngine(lemma);
  std::vector<SuiteRow> rows;
  rows.reserve(options.cases);
  for (std::int64_t c = 0; c < options.cases; ++c) {
    SuiteRow row;
    row.lemma = lemma;
    row.engine = engine;
    row.seed = DeriveSeed(options.seed, static_cast<std::uint64_t>(c));
    SplitMix64 stream(row.seed);
    const double eps = options.eps.value_or(kSuiteEps[c % kSuiteEps.size()]);
    const std::optional<double> engine_eps =
        engine == Engine::kEpsRanking ? std::optional<double>(eps)
                                      : std::nullopt;

    Instance instance;
    if (engine == Engine::kFullyOnline) {
      instance = SuiteFullyOnline(stream, options.max_fully_online_vertices);
    } else if (lemma == LemmaId::kL9) {
      BipartiteInstance g;
      do {
        g = SuiteBipartite(stream, options.max_side, /*weighted=*/true);
      } while (g.NumEdges() == 0);
      instance = std::move(g);
    } else {
      instance = SuiteBipartite(stream, options.max_side,
                                engine == Engine::kEpsRanking);
    }
    const int dim = RankDimension(instance);
    const RankVector x = DrawRanks(stream, dim);
    const int vertex = static_cast<int>(stream.NextBelow(dim));

    switch (lemma) {
      case LemmaId::kL3:
      case LemmaId::kL5:
      case LemmaId::kL7:
        row.report = CheckBoundedDifference(instance, engine, x, vertex,
                                            stream.NextUnit(), engine_eps);
        break;
      case LemmaId::kL4:
      case LemmaId::kL6:
      case LemmaId::kL8:
        row.report = CheckVertexRemoval(instance, engine, x, vertex,
                                        engine_eps);
        break;
      case LemmaId::kL8Utility:
        row.report = CheckUtilityMonotonicity(
            std::get<BipartiteInstance>(instance), x, vertex, eps);
        break;
      case LemmaId::kL9: {
        const auto& g = std::get<BipartiteInstance>(instance);
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < g.num_buyers; ++i) {
          for (int j : g.adjacency[i]) edges.emplace_back(i, j);
        }
        const auto [buyer, seller] = edges[stream.NextBelow(edges.size())];
        const EdgeBoundReport edge = CheckRevenueUtilityEdgeBound(
            g, eps, buyer, seller, options.edge_bound_trials, stream());
        row.report.lemma = LemmaId::kL9;
        row.report.holds = edge.consistent;
        row.report.f_x = edge.estimate;
        row.report.f_xprime = edge.lower_99;
        row.report.bound = edge.target;
        row.report.max_accounting_residual = edge.max_accounting_residual;
        break;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string FormatSuiteCsv(const std::vector<SuiteRow>& rows) {
  std::ostringstream out;
  out << "lemma_id,engine,seed,holds,f_x,f_xprime,bound\n";
  for (const SuiteRow& row : rows) {
    out << LemmaName(row.lemma) << ',' << EngineName(row.engine) << ','
        << row.seed << ',' << (row.report.holds ? "true" : "false") << ','
        << FormatDouble(row.report.f_x) << ','
        << FormatDouble(row.report.f_xprime) << ','
        << FormatDouble(row.report.bound) << '\n';
  }
  return out.str();
}

}  // namespace ranking
