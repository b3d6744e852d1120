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

#include "ranking/instance.h"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace ranking {
namespace {

std::string At(const char* what, int index) {
  return std::string(what) + "[" + std::to_string(index) + "]";
}

void CheckSortedUniqueInRange(const std::vector<int>& list, int bound,
                              const std::string& location,
                              ValidationReport& report) {
  for (size_t k = 0; k < list.size(); ++k) {
    if (list[k] < 0 || list[k] >= bound) {
      report.push_back({location, "index " + std::to_string(list[k]) +
                                      " out of range"});
    }
    if (k > 0 && list[k] == list[k - 1]) {
      report.push_back(
          {location, "duplicate index " + std::to_string(list[k])});
    } else if (k > 0 && list[k] < list[k - 1]) {
      report.push_back({location, "adjacency list not sorted"});
    }
  }
}

}  // namespace

std::string ToString(const Rational& r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

int BipartiteInstance::NumEdges() const {
  int edges = 0;
  for (const auto& list : adjacency) edges += static_cast<int>(list.size());
  return edges;
}

int BipartiteInstance::NumActiveSellers() const {
  int active = 0;
  for (int j = 0; j < num_sellers; ++j) active += IsRemoved(j) ? 0 : 1;
  return active;
}

int FullyOnlineInstance::NumEdges() const {
  int twice = 0;
  for (const auto& list : adjacency) twice += static_cast<int>(list.size());
  return twice / 2;
}

ValidationReport Validate(const BipartiteInstance& instance) {
  ValidationReport report;
  if (instance.num_sellers < 0 || instance.num_buyers < 0) {
    report.push_back({"instance", "negative vertex count"});
    return report;
  }
  if (static_cast<int>(instance.adjacency.size()) != instance.num_buyers) {
    report.push_back({"adjacency", "expected one list per buyer"});
  } else {
    for (int i = 0; i < instance.num_buyers; ++i) {
      CheckSortedUniqueInRange(instance.adjacency[i], instance.num_sellers,
                               At("adjacency", i), report);
      for (int j : instance.adjacency[i]) {
        if (j >= 0 && j < instance.num_sellers && instance.IsRemoved(j)) {
          report.push_back({At("adjacency", i),
                            "edge to removed seller " + std::to_string(j)});
        }
      }
    }
  }

  const auto& order = instance.arrival_order;
  bool bijection = static_cast<int>(order.size()) == instance.num_buyers;
  if (bijection) {
    std::vector<bool> seen(instance.num_buyers, false);
    for (int i : order) {
      if (i < 0 || i >= instance.num_buyers || seen[i]) {
        bijection = false;
        break;
      }
      seen[i] = true;
    }
  }
  if (!bijection) {
    report.push_back({"arrival_order", "arrival_order not a bijection"});
  }

  if (instance.weights) {
    if (static_cast<int>(instance.weights->size()) != instance.num_sellers) {
      report.push_back({"weights", "expected one weight per seller"});
    } else {
      for (int j = 0; j < instance.num_sellers; ++j) {
        const double w = (*instance.weights)[j];
        if (!(w > 0.0) || !std::isfinite(w)) {
          report.push_back({At("weights", j), "weight not strictly positive"});
        }
      }
    }
  }
  if (instance.capacities) {
    if (static_cast<int>(instance.capacities->size()) !=
        instance.num_sellers) {
      report.push_back({"capacities", "expected one capacity per seller"});
    } else {
      for (int j = 0; j < instance.num_sellers; ++j) {
        if ((*instance.capacities)[j] < 1) {
          report.push_back({At("capacities", j), "capacity below 1"});
        }
      }
    }
  }
  if (!instance.removed_sellers.empty() &&
      static_cast<int>(instance.removed_sellers.size()) !=
          instance.num_sellers) {
    report.push_back({"removed_sellers", "size mismatch"});
  }
  return report;
}

ValidationReport Validate(const FullyOnlineInstance& instance) {
  ValidationReport report;
  const int n = instance.num_vertices;
  if (n < 0) {
    report.push_back({"instance", "negative vertex count"});
    return report;
  }
  if (static_cast<int>(instance.arrival_time.size()) != n ||
      static_cast<int>(instance.departure_time.size()) != n) {
    report.push_back({"events", "expected one arrival and one departure per "
                                "vertex"});
    return report;
  }
  std::vector<Rational> stamps;
  stamps.reserve(2 * n);
  for (int v = 0; v < n; ++v) {
    const Rational& a = instance.arrival_time[v];
    const Rational& d = instance.departure_time[v];
    if (a.den <= 0 || d.den <= 0) {
      report.push_back({At("events", v), "non-positive denominator"});
      return report;
    }
    if (!(a < d)) {
      report.push_back({At("events", v), "arrival not before departure"});
    }
    stamps.push_back(a);
    stamps.push_back(d);
  }
  std::sort(stamps.begin(), stamps.end());
  if (std::adjacent_find(stamps.begin(), stamps.end()) != stamps.end()) {
    report.push_back({"events", "timestamps not distinct"});
  }

  if (static_cast<int>(instance.adjacency.size()) != n) {
    report.push_back({"adjacency", "expected one list per vertex"});
    return report;
  }
  for (int v = 0; v < n; ++v) {
    const auto& list = instance.adjacency[v];
    CheckSortedUniqueInRange(list, n, At("adjacency", v), report);
    for (int u : list) {
      if (u < 0 || u >= n) continue;
      if (u == v) {
        report.push_back({At("adjacency", v), "self-loop"});
        continue;
      }
      const auto& back = instance.adjacency[u];
      if (!std::binary_search(back.begin(), back.end(), v)) {
        report.push_back({At("adjacency", v),
                          "edge to " + std::to_string(u) + " not symmetric"});
      }
      if (instance.IsRemoved(u) || instance.IsRemoved(v)) {
        report.push_back({At("adjacency", v), "edge to removed vertex"});
      }
    }
  }
  if (!instance.removed_vertices.empty() &&
      static_cast<int>(instance.removed_vertices.size()) != n) {
    report.push_back({"removed_vertices", "size mismatch"});
  }
  return report;
}

ValidationReport Validate(const Instance& instance) {
  return std::visit([](const auto& g) { return Validate(g); }, instance);
}

bool IsValid(const Instance& instance) { return Validate(instance).empty(); }

ValidationReport ValidateMatching(const BipartiteInstance& instance,
                                  const Matching& matching) {
  ValidationReport report;
  std::vector<int> seller_uses(instance.num_sellers, 0);
  std::vector<bool> buyer_used(instance.num_buyers, false);
  for (const auto& [j, i] : matching.pairs) {
    const std::string where =
        "pair(" + std::to_string(j) + "," + std::to_string(i) + ")";
    if (j < 0 || j >= instance.num_sellers || i < 0 ||
        i >= instance.num_buyers) {
      report.push_back({where, "index out of range"});
      continue;
    }
    const auto& list = instance.adjacency[i];
    if (!std::binary_search(list.begin(), list.end(), j)) {
      report.push_back({where, "not an instance edge"});
    }
    if (buyer_used[i]) report.push_back({where, "buyer matched twice"});
    buyer_used[i] = true;
    if (++seller_uses[j] > instance.Capacity(j)) {
      report.push_back({where, "seller over capacity"});
    }
  }
  return report;
}

ValidationReport ValidateMatching(const FullyOnlineInstance& instance,
                                  const Matching& matching,
                                  bool require_overlap) {
  ValidationReport report;
  std::vector<bool> used(instance.num_vertices, false);
  for (const auto& [u, v] : matching.pairs) {
    const std::string where =
        "pair(" + std::to_string(u) + "," + std::to_string(v) + ")";
    if (u < 0 || u >= instance.num_vertices || v < 0 ||
        v >= instance.num_vertices) {
      report.push_back({where, "index out of range"});
      continue;
    }
    const auto& list = instance.adjacency[u];
    if (!std::binary_search(list.begin(), list.end(), v)) {
      report.push_back({where, "not an instance edge"});
    }
    if (require_overlap && !instance.Overlap(u, v)) {
      report.push_back({where, "presence intervals do not intersect"});
    }
    if (used[u] || used[v] || u == v) {
      report.push_back({where, "vertex matched twice"});
    }
    used[u] = used[v] = true;
  }
  return report;
}

BipartiteInstance RemoveSeller(const BipartiteInstance& instance, int seller) {
  if (seller < 0 || seller >= instance.num_sellers) {
    throw std::out_of_range("seller index " + std::to_string(seller) +
                            " out of range");
  }
  BipartiteInstance out = instance;
  if (out.removed_sellers.empty()) {
    out.removed_sellers.assign(out.num_sellers, false);
  }
  out.removed_sellers[seller] = true;
  for (auto& list : out.adjacency) {
    std::erase(list, seller);
  }
  return out;
}

FullyOnlineInstance RemoveVertex(const FullyOnlineInstance& instance,
                                 int vertex) {
  if (vertex < 0 || vertex >= instance.num_vertices) {
    throw std::out_of_range("vertex index " + std::to_string(vertex) +
                            " out of range");
  }
  FullyOnlineInstance out = instance;
  if (out.removed_vertices.empty()) {
    out.removed_vertices.assign(out.num_vertices, false);
  }
  out.removed_vertices[vertex] = true;
  for (int u : out.adjacency[vertex]) std::erase(out.adjacency[u], vertex);
  out.adjacency[vertex].clear();
  return out;
}

Instance RemoveVertex(const Instance& instance, int vertex) {
  return std::visit(
      [vertex](const auto& g) -> Instance {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, BipartiteInstance>) {
          return RemoveSeller(g, vertex);
        } else {
          return RemoveVertex(g, vertex);
        }
      },
      instance);
}

BipartiteInstance InduceOnMatchedSellers(const BipartiteInstance& instance,
                                         const Matching& matching) {
  if (!ValidateMatching(instance, matching).empty()) {
    throw std::invalid_argument("not a matching in the instance");
  }
  std::vector<int> new_index(instance.num_sellers, -1);
  for (const auto& [j, i] : matching.pairs) new_index[j] = 0;
  int kept = 0;
  for (int j = 0; j < instance.num_sellers; ++j) {
    if (new_index[j] == 0) new_index[j] = kept++;
  }

  BipartiteInstance out;
  out.num_sellers = kept;
  out.num_buyers = instance.num_buyers;
  out.arrival_order = instance.arrival_order;
  out.adjacency.resize(instance.num_buyers);
  for (int i = 0; i < instance.num_buyers; ++i) {
    for (int j : instance.adjacency[i]) {
      if (new_index[j] >= 0) out.adjacency[i].push_back(new_index[j]);
    }
  }
  if (instance.weights) out.weights.emplace(kept);
  if (instance.capacities) out.capacities.emplace(kept);
  for (int j = 0; j < instance.num_sellers; ++j) {
    if (new_index[j] < 0) continue;
    if (instance.weights) (*out.weights)[new_index[j]] = (*instance.weights)[j];
    if (instance.capacities) {
      (*out.capacities)[new_index[j]] = (*instance.capacities)[j];
    }
  }
  return out;
}

ExpandedInstance ExpandCapacities(const BipartiteInstance& instance) {
  if (!instance.capacities) {
    throw std::invalid_argument("instance has no capacities");
  }
  ExpandedInstance result;
  std::vector<int> first_copy(instance.num_sellers, 0);
  for (int j = 0; j < instance.num_sellers; ++j) {
    first_copy[j] = static_cast<int>(result.copy_to_original.size());
    for (int k = 0; k < (*instance.capacities)[j]; ++k) {
      result.copy_to_original.push_back(j);
    }
  }
  const int total = static_cast<int>(result.copy_to_original.size());

  BipartiteInstance& out = result.instance;
  out.num_sellers = total;
  out.num_buyers = instance.num_buyers;
  out.arrival_order = instance.arrival_order;
  out.adjacency.resize(instance.num_buyers);
  for (int i = 0; i < instance.num_buyers; ++i) {
    for (int j : instance.adjacency[i]) {
      for (int k = 0; k < (*instance.capacities)[j]; ++k) {
        out.adjacency[i].push_back(first_copy[j] + k);
      }
    }
  }
  out.capacities.emplace(total, 1);
  if (instance.weights) {
    out.weights.emplace();
    for (int j : result.copy_to_original) {
      out.weights->push_back((*instance.weights)[j]);
    }
  }
  if (!instance.removed_sellers.empty()) {
    out.removed_sellers.reserve(total);
    for (int j : result.copy_to_original) {
      out.removed_sellers.push_back(instance.removed_sellers[j]);
    }
  }
  return result;
}

bool IsBipartiteGraph(const FullyOnlineInstance& instance) {
  std::vector<int> color(instance.num_vertices, -1);
  for (int s = 0; s < instance.num_vertices; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<int> frontier;
    frontier.push(s);
    while (!frontier.empty()) {
      const int v = frontier.front();
      frontier.pop();
      for (int u : instance.adjacency[v]) {
        if (color[u] < 0) {
          color[u] = 1 - color[v];
          frontier.push(u);
        } else if (color[u] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace ranking
