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

#include "ranking/generators.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "json.hpp"
#include "ranking/instance_io.h"
#include "ranking/rng.h"

namespace ranking {
namespace {

void RequireProbability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  }
}

std::vector<int> Identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

void CheckGenerated(const Instance& instance) {
  const ValidationReport report = Validate(instance);
  if (!report.empty()) {
    throw std::logic_error("generator produced an invalid instance: " +
                           report.front().location + ": " +
                           report.front().message);
  }
}

}  // namespace

BipartiteInstance GenUpperTriangular(int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  BipartiteInstance g;
  g.num_sellers = g.num_buyers = n;
  g.adjacency.resize(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) g.adjacency[i].push_back(j);
  }
  g.arrival_order = Identity(n);
  return g;
}

BipartiteInstance GenRandomBipartite(int n_sellers, int n_buyers, double p,
                                     std::uint64_t seed,
                                     std::optional<WeightRange> weights,
                                     bool plant_perfect_matching) {
  if (n_sellers < 0 || n_buyers < 0) {
    throw std::invalid_argument("vertex counts must be non-negative");
  }
  RequireProbability(p);
  if (weights && !(weights->min > 0.0 && weights->min <= weights->max &&
                   std::isfinite(weights->max))) {
    throw std::invalid_argument("weight range must satisfy 0 < min <= max");
  }
  SplitMix64 stream(seed);
  BipartiteInstance g;
  g.num_sellers = n_sellers;
  g.num_buyers = n_buyers;
  g.adjacency.resize(n_buyers);
  for (int i = 0; i < n_buyers; ++i) {
    for (int j = 0; j < n_sellers; ++j) {
      if (stream.NextUnit() < p) g.adjacency[i].push_back(j);
    }
  }
  if (plant_perfect_matching) {
    std::vector<int> sellers = Identity(n_sellers);
    Shuffle(stream, sellers);
    for (int i = 0; i < std::min(n_sellers, n_buyers); ++i) {
      auto& list = g.adjacency[i];
      auto it = std::lower_bound(list.begin(), list.end(), sellers[i]);
      if (it == list.end() || *it != sellers[i]) list.insert(it, sellers[i]);
    }
  }
  g.arrival_order = Identity(n_buyers);
  Shuffle(stream, g.arrival_order);
  if (weights) {
    const double log_span = std::log(weights->max / weights->min);
    g.weights.emplace(n_sellers);
    for (double& w : *g.weights) {
      w = weights->min * std::exp(stream.NextUnit() * log_span);
    }
  }
  return g;
}

BipartiteInstance GenFigure1() {
  BipartiteInstance g;
  g.num_sellers = 2;
  g.num_buyers = 1;
  g.adjacency = {{kFigure1Light, kFigure1Heavy}};
  g.arrival_order = {0};
  g.weights = std::vector<double>{1.0, 1e10};
  return g;
}

FullyOnlineInstance GenRandomFullyOnline(int n, double p, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  RequireProbability(p);
  SplitMix64 stream(seed);
  std::vector<int> slots;
  slots.reserve(2 * n);
  for (int v = 0; v < n; ++v) slots.insert(slots.end(), {v, v});
  Shuffle(stream, slots);

  FullyOnlineInstance g;
  g.num_vertices = n;
  g.arrival_time.resize(n);
  g.departure_time.resize(n);
  std::vector<bool> arrived(n, false);
  for (int k = 0; k < 2 * n; ++k) {
    const int v = slots[k];
    const Rational t{k + 1, 1};
    if (!arrived[v]) {
      g.arrival_time[v] = t;
      arrived[v] = true;
    } else {
      g.departure_time[v] = t;
    }
  }
  g.adjacency.resize(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (stream.NextUnit() < p) {
        g.adjacency[u].push_back(v);
        g.adjacency[v].push_back(u);
      }
    }
  }
  for (auto& list : g.adjacency) std::sort(list.begin(), list.end());
  CheckGenerated(g);
  return g;
}

BipartiteInstance GenDisjointPerfect(int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  BipartiteInstance g;
  g.num_sellers = g.num_buyers = n;
  g.adjacency.resize(n);
  for (int i = 0; i < n; ++i) g.adjacency[i] = {i};
  g.arrival_order = Identity(n);
  return g;
}

Family ParseFamily(std::string_view name) {
  std::string normalized(name);
  std::replace(normalized.begin(), normalized.end(), '-', '_');
  for (Family f : {Family::kUpperTriangular, Family::kRandomBipartite,
                   Family::kFigure1, Family::kRandomFullyOnline,
                   Family::kDisjointPerfect}) {
    if (FamilyName(f) == normalized) return f;
  }
  throw std::invalid_argument("unknown generator family \"" +
                              std::string(name) + "\"");
}

std::string_view FamilyName(Family family) {
  switch (family) {
    case Family::kUpperTriangular:
      return "upper_triangular";
    case Family::kRandomBipartite:
      return "random_bipartite";
    case Family::kFigure1:
      return "figure1";
    case Family::kRandomFullyOnline:
      return "random_fully_online";
    case Family::kDisjointPerfect:
      return "disjoint_perfect";
  }
  return "unknown";
}

std::string GeneratorSpec::ToJson() const {
  nlohmann::ordered_json doc;
  doc["family"] = FamilyName(family);
  switch (family) {
    case Family::kUpperTriangular:
    case Family::kDisjointPerfect:
      doc["n"] = n;
      break;
    case Family::kRandomBipartite:
      doc["ns"] = n_sellers;
      doc["nb"] = n_buyers;
      doc["p"] = p;
      doc["seed"] = seed;
      if (weights) doc["weights"] = {weights->min, weights->max};
      if (plant_perfect_matching) doc["planted"] = true;
      break;
    case Family::kRandomFullyOnline:
      doc["n"] = n;
      doc["p"] = p;
      doc["seed"] = seed;
      break;
    case Family::kFigure1:
      break;
  }
  return doc.dump();
}

GeneratorSpec GeneratorSpec::FromJson(std::string_view json_text) {
  try {
    const auto doc = nlohmann::json::parse(json_text);
    GeneratorSpec spec;
    spec.family = ParseFamily(doc.at("family").get<std::string>());
    spec.n = doc.value("n", 0);
    spec.n_sellers = doc.value("ns", 0);
    spec.n_buyers = doc.value("nb", 0);
    spec.p = doc.value("p", 0.0);
    spec.seed = doc.value("seed", std::uint64_t{0});
    if (auto it = doc.find("weights"); it != doc.end()) {
      spec.weights = WeightRange{it->at(0).get<double>(),
                                 it->at(1).get<double>()};
    }
    spec.plant_perfect_matching = doc.value("planted", false);
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("invalid generator spec: ") + e.what());
  }
}

bool operator==(const GeneratorSpec& a, const GeneratorSpec& b) {
  const auto range = [](const std::optional<WeightRange>& w) {
    return w ? std::pair{w->min, w->max} : std::pair{0.0, 0.0};
  };
  return a.family == b.family && a.n == b.n && a.n_sellers == b.n_sellers &&
         a.n_buyers == b.n_buyers && a.p == b.p && a.seed == b.seed &&
         a.weights.has_value() == b.weights.has_value() &&
         range(a.weights) == range(b.weights) &&
         a.plant_perfect_matching == b.plant_perfect_matching;
}

Instance Generate(const GeneratorSpec& spec) {
  switch (spec.family) {
    case Family::kUpperTriangular:
      return GenUpperTriangular(spec.n);
    case Family::kRandomBipartite:
      return GenRandomBipartite(spec.n_sellers, spec.n_buyers, spec.p,
                                spec.seed, spec.weights,
                                spec.plant_perfect_matching);
    case Family::kFigure1:
      return GenFigure1();
    case Family::kRandomFullyOnline:
      return GenRandomFullyOnline(spec.n, spec.p, spec.seed);
    case Family::kDisjointPerfect:
      return GenDisjointPerfect(spec.n);
  }
  throw std::invalid_argument("unknown generator family");
}

}  // namespace ranking
