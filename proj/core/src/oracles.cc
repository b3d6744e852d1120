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

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <utility>

namespace ranking {
namespace {

constexpr int kFree = -1;

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const BipartiteInstance& g)
      : g_(g),
        buyer_mate_(g.num_buyers, kFree),
        seller_mate_(g.num_sellers, kFree),
        dist_(g.num_buyers, 0) {}

  int Solve() {
    int size = 0;
    while (Bfs()) {
      for (int i = 0; i < g_.num_buyers; ++i) {
        if (buyer_mate_[i] == kFree && Dfs(i)) ++size;
      }
    }
    return size;
  }

  Matching Result() const {
    Matching m;
    for (int i = 0; i < g_.num_buyers; ++i) {
      if (buyer_mate_[i] != kFree) m.pairs.emplace_back(buyer_mate_[i], i);
    }
    return m;
  }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();

  bool Bfs() {
    std::queue<int> frontier;
    for (int i = 0; i < g_.num_buyers; ++i) {
      if (buyer_mate_[i] == kFree) {
        dist_[i] = 0;
        frontier.push(i);
      } else {
        dist_[i] = kInf;
      }
    }
    bool found = false;
    while (!frontier.empty()) {
      const int i = frontier.front();
      frontier.pop();
      for (int j : g_.adjacency[i]) {
        const int next = seller_mate_[j];
        if (next == kFree) {
          found = true;
        } else if (dist_[next] == kInf) {
          dist_[next] = dist_[i] + 1;
          frontier.push(next);
        }
      }
    }
    return found;
  }

  bool Dfs(int i) {
    for (int j : g_.adjacency[i]) {
      const int next = seller_mate_[j];
      if (next == kFree || (dist_[next] == dist_[i] + 1 && Dfs(next))) {
        buyer_mate_[i] = j;
        seller_mate_[j] = i;
        return true;
      }
    }
    dist_[i] = kInf;
    return false;
  }

  const BipartiteInstance& g_;
  std::vector<int> buyer_mate_;
  std::vector<int> seller_mate_;
  std::vector<int> dist_;
};

class GeneralBranchAndBound {
 public:
  explicit GeneralBranchAndBound(std::vector<std::vector<int>> feasible)
      : adj_(std::move(feasible)),
        mate_(adj_.size(), kFree),
        best_mate_(adj_.size(), kFree) {}

  int Solve() {
    Search(0, 0);
    return best_;
  }

  const std::vector<int>& best_mate() const { return best_mate_; }

 private:
  // Vertices below `v` are decided. Matching v is only tried with higher
  // neighbors; a lower neighbor was either matched already or skipped.
  void Search(int v, int current) {
    const int n = static_cast<int>(adj_.size());
    while (v < n && (mate_[v] != kFree || !HasFreeHigherNeighbor(v))) ++v;
    if (v == n) {
      if (current > best_) {
        best_ = current;
        best_mate_ = mate_;
      }
      return;
    }
    int open = 0;
    for (int u = v; u < n; ++u) open += mate_[u] == kFree ? 1 : 0;
    if (current + open / 2 <= best_) return;

    for (int u : adj_[v]) {
      if (u <= v || mate_[u] != kFree) continue;
      mate_[v] = u;
      mate_[u] = v;
      Search(v + 1, current + 1);
      mate_[v] = mate_[u] = kFree;
    }
    // Leave v unmatched; block it so later vertices cannot pick it.
    mate_[v] = v;
    Search(v + 1, current);
    mate_[v] = kFree;
  }

  bool HasFreeHigherNeighbor(int v) const {
    for (int u : adj_[v]) {
      if (u > v && mate_[u] == kFree) return true;
    }
    return false;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<int> mate_;
  std::vector<int> best_mate_;
  int best_ = -1;
};

class SellerAugmenter {
 public:
  explicit SellerAugmenter(const BipartiteInstance& g)
      : buyer_mate_(g.num_buyers, kFree), seller_adj_(g.num_sellers) {
    for (int i = 0; i < g.num_buyers; ++i) {
      for (int j : g.adjacency[i]) seller_adj_[j].push_back(i);
    }
  }

  // Tries to add seller j while keeping every previously kept seller matched.
  bool TryAdd(int j) {
    visited_.assign(buyer_mate_.size(), false);
    return Augment(j);
  }

  const std::vector<int>& buyer_mate() const { return buyer_mate_; }

 private:
  bool Augment(int j) {
    for (int i : seller_adj_[j]) {
      if (visited_[i]) continue;
      visited_[i] = true;
      if (buyer_mate_[i] == kFree || Augment(buyer_mate_[i])) {
        buyer_mate_[i] = j;
        return true;
      }
    }
    return false;
  }

  std::vector<int> buyer_mate_;
  std::vector<std::vector<int>> seller_adj_;
  std::vector<bool> visited_;
};

void EnumerateMatchings(const std::vector<std::pair<int, int>>& edges,
                        size_t next, std::vector<bool>& seller_used,
                        std::vector<bool>& buyer_used,
                        std::vector<int>& chosen, std::vector<int>& best) {
  if (next == edges.size()) {
    if (chosen.size() > best.size()) best = chosen;
    return;
  }
  const auto [j, i] = edges[next];
  if (!seller_used[j] && !buyer_used[i]) {
    seller_used[j] = buyer_used[i] = true;
    chosen.push_back(static_cast<int>(next));
    EnumerateMatchings(edges, next + 1, seller_used, buyer_used, chosen, best);
    chosen.pop_back();
    seller_used[j] = buyer_used[i] = false;
  }
  EnumerateMatchings(edges, next + 1, seller_used, buyer_used, chosen, best);
}

}  // namespace

OracleResult MaxMatchingBipartite(const BipartiteInstance& instance) {
  HopcroftKarp solver(instance);
  OracleResult result;
  result.objective = solver.Solve();
  result.matching = solver.Result();
  return result;
}

OracleResult MaxMatchingGeneral(const FullyOnlineInstance& instance,
                                int edge_cap) {
  const int n = instance.num_vertices;
  std::vector<std::vector<int>> feasible(n);
  int edges = 0;
  for (int u = 0; u < n; ++u) {
    for (int v : instance.adjacency[u]) {
      if (u < v && instance.Overlap(u, v)) {
        feasible[u].push_back(v);
        feasible[v].push_back(u);
        ++edges;
      }
    }
  }
  if (edges > edge_cap) {
    throw OracleCapExceeded("instance has " + std::to_string(edges) +
                            " feasible edges, cap is " +
                            std::to_string(edge_cap));
  }
  GeneralBranchAndBound solver(std::move(feasible));
  OracleResult result;
  result.objective = solver.Solve();
  const auto& mate = solver.best_mate();
  for (int v = 0; v < n; ++v) {
    if (mate[v] != kFree && mate[v] != v && v < mate[v]) {
      result.matching.pairs.emplace_back(v, mate[v]);
    }
  }
  return result;
}

OracleResult MaxWeightSellerMatching(const BipartiteInstance& instance) {
  if (!instance.weights) {
    throw std::invalid_argument("weighted oracle requires seller weights");
  }
  const bool expand =
      instance.capacities &&
      std::any_of(instance.capacities->begin(), instance.capacities->end(),
                  [](int c) { return c > 1; });
  if (expand) {
    const ExpandedInstance expanded = ExpandCapacities(instance);
    OracleResult copy_result = MaxWeightSellerMatching(expanded.instance);
    for (auto& [j, i] : copy_result.matching.pairs) {
      j = expanded.copy_to_original[j];
    }
    return copy_result;
  }

  std::vector<int> order(instance.num_sellers);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return instance.Weight(a) > instance.Weight(b);
  });
  SellerAugmenter augmenter(instance);
  OracleResult result;
  for (int j : order) {
    if (augmenter.TryAdd(j)) result.objective += instance.Weight(j);
  }
  const auto& mate = augmenter.buyer_mate();
  for (int i = 0; i < instance.num_buyers; ++i) {
    if (mate[i] != kFree) result.matching.pairs.emplace_back(mate[i], i);
  }
  return result;
}

OracleResult BruteForceMaxMatching(const BipartiteInstance& instance,
                                   int edge_cap) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < instance.num_buyers; ++i) {
    for (int j : instance.adjacency[i]) edges.emplace_back(j, i);
  }
  if (static_cast<int>(edges.size()) > edge_cap) {
    throw OracleCapExceeded("instance has " + std::to_string(edges.size()) +
                            " edges, cap is " + std::to_string(edge_cap));
  }
  std::vector<bool> seller_used(instance.num_sellers, false);
  std::vector<bool> buyer_used(instance.num_buyers, false);
  std::vector<int> chosen;
  std::vector<int> best;
  EnumerateMatchings(edges, 0, seller_used, buyer_used, chosen, best);
  OracleResult result;
  for (int e : best) result.matching.pairs.push_back(edges[e]);
  result.objective = static_cast<double>(best.size());
  return result;
}

double OracleObjective(const Instance& instance, bool weighted, int edge_cap) {
  if (const auto* g = std::get_if<BipartiteInstance>(&instance)) {
    return weighted ? MaxWeightSellerMatching(*g).objective
                    : MaxMatchingBipartite(*g).objective;
  }
  return MaxMatchingGeneral(std::get<FullyOnlineInstance>(instance), edge_cap)
      .objective;
}

}  // namespace ranking
