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

// Instance data model for online matching: bipartite seller/buyer graphs
// (optionally vertex-weighted and capacitated) and fully online graphs whose
// vertices arrive and depart on a timeline.
//
// Vertex indices are dense and 0-based. Removing a vertex never reindexes the
// instance; the vertex is tombstoned instead so that a rank vector drawn for
// the original instance stays aligned with every instance derived from it.

#ifndef RANKING_INSTANCE_H_
#define RANKING_INSTANCE_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ranking {

// Exact rational timestamp num/den with den > 0.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const __int128 lhs = static_cast<__int128>(a.num) * b.den;
    const __int128 rhs = static_cast<__int128>(b.num) * a.den;
    return lhs <=> rhs;
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }
  double ToDouble() const { return static_cast<double>(num) / den; }
};

std::string ToString(const Rational& r);

struct BipartiteInstance {
  int num_sellers = 0;
  int num_buyers = 0;
  // adjacency[buyer] is the sorted list of adjacent sellers.
  std::vector<std::vector<int>> adjacency;
  // arrival_order[k] is the k-th buyer to arrive.
  std::vector<int> arrival_order;
  std::optional<std::vector<double>> weights;
  std::optional<std::vector<int>> capacities;
  // Sellers deleted by RemoveSeller. Empty means none removed.
  std::vector<bool> removed_sellers;

  bool is_weighted() const { return weights.has_value(); }
  bool IsRemoved(int seller) const {
    return !removed_sellers.empty() && removed_sellers[seller];
  }
  double Weight(int seller) const {
    return weights ? (*weights)[seller] : 1.0;
  }
  int Capacity(int seller) const {
    return capacities ? (*capacities)[seller] : 1;
  }
  int NumEdges() const;
  int NumActiveSellers() const;
};

struct FullyOnlineInstance {
  int num_vertices = 0;
  std::vector<Rational> arrival_time;
  std::vector<Rational> departure_time;
  // adjacency[v] is the sorted neighbor list of v; symmetric.
  std::vector<std::vector<int>> adjacency;
  std::vector<bool> removed_vertices;

  bool IsRemoved(int v) const {
    return !removed_vertices.empty() && removed_vertices[v];
  }
  // True if the presence intervals [arrival, departure) of u and v intersect.
  bool Overlap(int u, int v) const {
    return arrival_time[u] < departure_time[v] &&
           arrival_time[v] < departure_time[u];
  }
  int NumEdges() const;
};

using Instance = std::variant<BipartiteInstance, FullyOnlineInstance>;

// One uniform [0, 1) rank per seller (bipartite) or per vertex (fully
// online). The only source of randomness for every engine.
struct RankVector {
  std::vector<double> values;

  int size() const { return static_cast<int>(values.size()); }
  double operator[](int i) const { return values[i]; }
};

// Pairs are (offline, online): (seller, buyer) in the bipartite setting and
// (chosen vertex, departing vertex) in the fully online one.
struct Matching {
  std::vector<std::pair<int, int>> pairs;

  int size() const { return static_cast<int>(pairs.size()); }
  bool empty() const { return pairs.empty(); }
};

struct Violation {
  std::string location;
  std::string message;
};

using ValidationReport = std::vector<Violation>;

// Returns an empty report iff every structural invariant holds.
ValidationReport Validate(const BipartiteInstance& instance);
ValidationReport Validate(const FullyOnlineInstance& instance);
ValidationReport Validate(const Instance& instance);

bool IsValid(const Instance& instance);

// Checks that `matching` uses only instance edges and respects seller
// capacities (each seller at most c_j times, each buyer at most once).
ValidationReport ValidateMatching(const BipartiteInstance& instance,
                                  const Matching& matching);
// Checks that `matching` is a matching on instance edges; when
// `require_overlap` is set each pair must also share presence time.
ValidationReport ValidateMatching(const FullyOnlineInstance& instance,
                                  const Matching& matching,
                                  bool require_overlap = true);

// G_{-v}: v and its incident edges deleted, every other index and attribute
// preserved. Throws std::out_of_range on a bad index.
BipartiteInstance RemoveSeller(const BipartiteInstance& instance, int seller);
FullyOnlineInstance RemoveVertex(const FullyOnlineInstance& instance,
                                 int vertex);
Instance RemoveVertex(const Instance& instance, int vertex);

// Keeps only the sellers covered by `matching` (all buyers kept); sellers are
// reindexed in increasing original order. Throws std::invalid_argument if
// `matching` is not a matching in `instance`.
BipartiteInstance InduceOnMatchedSellers(const BipartiteInstance& instance,
                                         const Matching& matching);

struct ExpandedInstance {
  BipartiteInstance instance;
  // copy_to_original[k] is the seller the k-th copy was made from.
  std::vector<int> copy_to_original;
};

// Replaces seller j by c_j unit-capacity copies that inherit w_j and j's
// adjacency. Copies of j are contiguous and ordered by j. Throws
// std::invalid_argument if the instance has no capacities.
ExpandedInstance ExpandCapacities(const BipartiteInstance& instance);

// Two-colorability of the fully online graph (ignoring removed vertices).
bool IsBipartiteGraph(const FullyOnlineInstance& instance);

}  // namespace ranking

#endif  // RANKING_INSTANCE_H_
