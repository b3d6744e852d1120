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

#include "ranking/engines.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ranking {
namespace {

void CheckRanks(const RankVector& x, int dimension) {
  if (x.size() != dimension) {
    throw std::invalid_argument("rank vector has " + std::to_string(x.size()) +
                                " entries, expected " +
                                std::to_string(dimension));
  }
  for (int k = 0; k < x.size(); ++k) {
    if (!(x[k] >= 0.0 && x[k] < 1.0)) {
      throw std::invalid_argument("rank " + std::to_string(k) +
                                  " outside [0, 1)");
    }
  }
}

void RequireWeights(const BipartiteInstance& instance) {
  if (!instance.weights) {
    throw std::invalid_argument("engine requires seller weights");
  }
}

RunRecord EmptyRecord(int offline, int online) {
  RunRecord run;
  run.revenue.assign(offline, 0.0);
  run.utility.assign(online, 0.0);
  return run;
}

// Shared online loop for the bipartite engines. `prefer(a, b)` is true when
// seller a beats seller b; scanning adjacency in increasing index order with a
// strict comparison sends ties to the lower index. `split(j)` divides the
// value of a match with j into revenue and utility. Only the single-valued
// engine reads capacities; the others match each seller at most once.
struct Split {
  double revenue;
  double utility;
};

template <typename Prefer, typename SplitFn>
RunRecord RunBipartite(const BipartiteInstance& instance, Prefer prefer,
                       SplitFn split, bool weighted_objective,
                       bool use_capacities) {
  RunRecord run = EmptyRecord(instance.num_sellers, instance.num_buyers);
  std::vector<int> remaining(instance.num_sellers, 1);
  if (use_capacities) {
    for (int j = 0; j < instance.num_sellers; ++j) {
      remaining[j] = instance.Capacity(j);
    }
  }
  run.trace.reserve(instance.num_buyers);
  for (int i : instance.arrival_order) {
    int best = -1;
    for (int j : instance.adjacency[i]) {
      if (remaining[j] == 0) continue;
      if (best < 0 || prefer(j, best)) best = j;
    }
    TraceStep step;
    step.online_vertex = i;
    if (best >= 0) {
      --remaining[best];
      step.chosen = best;
      run.matching.pairs.emplace_back(best, i);
      const double w = weighted_objective ? instance.Weight(best) : 1.0;
      const Split share = split(best);
      run.revenue[best] += share.revenue;
      run.utility[i] = share.utility;
      run.objective += w;
    }
    run.trace.push_back(step);
  }
  return run;
}

}  // namespace

std::string_view EngineName(Engine engine) {
  switch (engine) {
    case Engine::kRanking:
      return "ranking";
    case Engine::kFullyOnline:
      return "fully_online";
    case Engine::kVertexWeighted:
      return "vertex_weighted";
    case Engine::kEpsRanking:
      return "eps_ranking";
    case Engine::kSingleValued:
      return "single_valued";
  }
  return "unknown";
}

Engine ParseEngine(std::string_view name) {
  for (Engine e : {Engine::kRanking, Engine::kFullyOnline,
                   Engine::kVertexWeighted, Engine::kEpsRanking,
                   Engine::kSingleValued}) {
    if (EngineName(e) == name) return e;
  }
  throw std::invalid_argument("unknown engine \"" + std::string(name) + "\"");
}

bool IsWeightedEngine(Engine engine) {
  return engine == Engine::kVertexWeighted || engine == Engine::kEpsRanking ||
         engine == Engine::kSingleValued;
}

double WeightedScore(double weight, double rank, double eps) {
  return -weight * std::expm1(rank - 1.0 - eps);
}

double Price(double weight, double rank, double eps) {
  return weight * std::exp(rank - 1.0 - eps);
}

RunRecord RunRankingPermutation(const BipartiteInstance& instance,
                                std::span<const int> seller_order) {
  const int n = instance.num_sellers;
  if (static_cast<int>(seller_order.size()) != n) {
    throw std::invalid_argument("permutation size differs from seller count");
  }
  std::vector<int> position(n, -1);
  for (int k = 0; k < n; ++k) {
    const int j = seller_order[k];
    if (j < 0 || j >= n || position[j] >= 0) {
      throw std::invalid_argument("not a permutation of the sellers");
    }
    position[j] = k;
  }
  // A permutation carries no price, so each match books its whole unit as
  // revenue.
  return RunBipartite(
      instance, [&](int a, int b) { return position[a] < position[b]; },
      [](int) { return Split{1.0, 0.0}; }, /*weighted_objective=*/false,
      /*use_capacities=*/false);
}

RunRecord RunRanking(const BipartiteInstance& instance, const RankVector& x) {
  CheckRanks(x, instance.num_sellers);
  return RunBipartite(
      instance, [&](int a, int b) { return x[a] < x[b]; },
      [&](int j) {
        return Split{Price(1.0, x[j], 0.0), WeightedScore(1.0, x[j], 0.0)};
      },
      /*weighted_objective=*/false, /*use_capacities=*/false);
}

RunRecord RunEpsRanking(const BipartiteInstance& instance, const RankVector& x,
                        double eps) {
  RequireWeights(instance);
  if (!(eps >= 0.0) || !std::isfinite(eps)) {
    throw std::invalid_argument("eps must be a finite value >= 0");
  }
  CheckRanks(x, instance.num_sellers);
  std::vector<double> score(instance.num_sellers);
  for (int j = 0; j < instance.num_sellers; ++j) {
    score[j] = WeightedScore(instance.Weight(j), x[j], eps);
  }
  return RunBipartite(
      instance, [&](int a, int b) { return score[a] > score[b]; },
      [&](int j) {
        return Split{Price(instance.Weight(j), x[j], eps), score[j]};
      },
      /*weighted_objective=*/true, /*use_capacities=*/false);
}

RunRecord RunSingleValuedRanking(const BipartiteInstance& instance,
                                 const RankVector& x) {
  RequireWeights(instance);
  if (!instance.capacities) {
    throw std::invalid_argument("single-valued ranking requires capacities");
  }
  CheckRanks(x, instance.num_sellers);
  std::vector<double> score(instance.num_sellers);
  for (int j = 0; j < instance.num_sellers; ++j) {
    score[j] = WeightedScore(instance.Weight(j), x[j], 0.0);
  }
  return RunBipartite(
      instance, [&](int a, int b) { return score[a] > score[b]; },
      [&](int j) {
        return Split{Price(instance.Weight(j), x[j], 0.0), score[j]};
      },
      /*weighted_objective=*/true, /*use_capacities=*/true);
}

RunRecord RunFullyOnlineRanking(const FullyOnlineInstance& instance,
                                const RankVector& x) {
  const int n = instance.num_vertices;
  CheckRanks(x, n);
  struct Event {
    Rational time;
    int vertex;
    bool arrive;
  };
  std::vector<Event> events;
  events.reserve(2 * n);
  for (int v = 0; v < n; ++v) {
    events.push_back({instance.arrival_time[v], v, true});
    events.push_back({instance.departure_time[v], v, false});
  }
  std::sort(events.begin(), events.end(),
            [](const Event& a, const Event& b) { return a.time < b.time; });

  RunRecord run = EmptyRecord(n, n);
  std::vector<bool> present(n, false);
  std::vector<bool> matched(n, false);
  for (const Event& ev : events) {
    const int i = ev.vertex;
    if (ev.arrive) {
      present[i] = true;
      continue;
    }
    present[i] = false;
    if (matched[i] || instance.IsRemoved(i)) continue;
    int best = -1;
    for (int j : instance.adjacency[i]) {
      if (!present[j] || matched[j]) continue;
      if (best < 0 || x[j] < x[best]) best = j;
    }
    TraceStep step;
    step.online_vertex = i;
    step.time = ev.time;
    if (best >= 0) {
      matched[i] = matched[best] = true;
      step.chosen = best;
      run.matching.pairs.emplace_back(best, i);
      run.revenue[best] += Price(1.0, x[best], 0.0);
      run.utility[i] = WeightedScore(1.0, x[best], 0.0);
      run.objective += 1.0;
    }
    run.trace.push_back(step);
  }
  return run;
}

RunRecord RunEngine(const Instance& instance, Engine engine,
                    const RankVector& x, double eps) {
  if (engine == Engine::kFullyOnline) {
    const auto* g = std::get_if<FullyOnlineInstance>(&instance);
    if (g == nullptr) {
      throw std::invalid_argument(
          "fully_online engine needs a fully online instance");
    }
    return RunFullyOnlineRanking(*g, x);
  }
  const auto* g = std::get_if<BipartiteInstance>(&instance);
  if (g == nullptr) {
    throw std::invalid_argument(std::string(EngineName(engine)) +
                                " engine needs a bipartite instance");
  }
  switch (engine) {
    case Engine::kRanking:
      return RunRanking(*g, x);
    case Engine::kVertexWeighted:
      return RunEpsRanking(*g, x, 0.0);
    case Engine::kEpsRanking:
      return RunEpsRanking(*g, x, eps);
    case Engine::kSingleValued:
      return RunSingleValuedRanking(*g, x);
    case Engine::kFullyOnline:
      break;
  }
  throw std::invalid_argument("unsupported engine");
}

int RankDimension(const Instance& instance) {
  if (const auto* g = std::get_if<BipartiteInstance>(&instance)) {
    return g->num_sellers;
  }
  return std::get<FullyOnlineInstance>(instance).num_vertices;
}

std::vector<int> ArgsortRanks(const RankVector& x) {
  std::vector<int> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return x[a] < x[b]; });
  return order;
}

double AccountingResidual(const RunRecord& run) {
  double total = 0.0;
  for (double r : run.revenue) total += r;
  for (double u : run.utility) total += u;
  const double diff = std::abs(total - run.objective);
  return run.objective > 0.0 ? diff / run.objective : diff;
}

}  // namespace ranking
