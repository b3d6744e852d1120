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

#include "ranking/instance_io.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace ranking {
namespace {

using Json = nlohmann::json;

const Json& Field(const Json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw FormatError(std::string("missing field \"") + key + "\"");
  }
  return *it;
}

int NonNegativeInt(const Json& value, const char* what) {
  if (!value.is_number_integer() || value.get<std::int64_t>() < 0 ||
      value.get<std::int64_t>() > std::numeric_limits<int>::max()) {
    throw FormatError(std::string(what) + " must be a non-negative integer");
  }
  return value.get<int>();
}

std::vector<int> IntList(const Json& value, const char* what) {
  if (!value.is_array()) {
    throw FormatError(std::string(what) + " must be an array");
  }
  std::vector<int> out;
  out.reserve(value.size());
  for (const auto& v : value) {
    if (!v.is_number_integer()) {
      throw FormatError(std::string(what) + " must hold integers");
    }
    out.push_back(v.get<int>());
  }
  return out;
}

std::pair<int, int> IndexPair(const Json& edge) {
  if (!edge.is_array() || edge.size() != 2 || !edge[0].is_number_integer() ||
      !edge[1].is_number_integer()) {
    throw FormatError("edge must be a pair of integers");
  }
  return {edge[0].get<int>(), edge[1].get<int>()};
}

void CheckIndex(int index, int bound, const char* what) {
  if (index < 0 || index >= bound) {
    throw FormatError(std::string(what) + " index " + std::to_string(index) +
                      " out of range");
  }
}

BipartiteInstance ParseBipartite(const Json& doc) {
  BipartiteInstance g;
  g.num_sellers = NonNegativeInt(Field(doc, "sellers"), "sellers");
  g.num_buyers = NonNegativeInt(Field(doc, "buyers"), "buyers");
  g.adjacency.resize(g.num_buyers);
  const Json& edges = Field(doc, "edges");
  if (!edges.is_array()) throw FormatError("edges must be an array");
  for (const auto& e : edges) {
    const auto [buyer, seller] = IndexPair(e);
    CheckIndex(buyer, g.num_buyers, "buyer");
    CheckIndex(seller, g.num_sellers, "seller");
    g.adjacency[buyer].push_back(seller);
  }
  // Sorting keeps the adjacency canonical; duplicates are left in place for
  // Validate() to report.
  for (auto& list : g.adjacency) std::sort(list.begin(), list.end());
  g.arrival_order = IntList(Field(doc, "arrival_order"), "arrival_order");
  if (auto it = doc.find("weights"); it != doc.end() && !it->is_null()) {
    if (!it->is_array()) throw FormatError("weights must be an array");
    std::vector<double> weights;
    for (const auto& w : *it) {
      if (!w.is_number()) throw FormatError("weights must be numbers");
      weights.push_back(w.get<double>());
    }
    g.weights = std::move(weights);
  }
  if (auto it = doc.find("capacities"); it != doc.end() && !it->is_null()) {
    g.capacities = IntList(*it, "capacities");
  }
  return g;
}

Rational ParseRational(const Json& num, const Json& den) {
  if (!num.is_number_integer() || !den.is_number_integer()) {
    throw FormatError("timestamp must be an integer pair");
  }
  Rational r{num.get<std::int64_t>(), den.get<std::int64_t>()};
  if (r.den == 0) throw FormatError("timestamp denominator is zero");
  if (r.den < 0) {
    r.num = -r.num;
    r.den = -r.den;
  }
  return r;
}

FullyOnlineInstance ParseFullyOnline(const Json& doc) {
  FullyOnlineInstance g;
  g.num_vertices = NonNegativeInt(Field(doc, "vertices"), "vertices");
  const int n = g.num_vertices;
  g.arrival_time.resize(n);
  g.departure_time.resize(n);
  std::vector<bool> has_arrival(n, false);
  std::vector<bool> has_departure(n, false);
  const Json& events = Field(doc, "events");
  if (!events.is_array()) throw FormatError("events must be an array");
  for (const auto& ev : events) {
    if (!ev.is_array() || ev.size() != 4 || !ev[0].is_number_integer() ||
        !ev[1].is_string()) {
      throw FormatError("event must be [vertex, kind, num, den]");
    }
    const int v = ev[0].get<int>();
    CheckIndex(v, n, "event vertex");
    const std::string kind = ev[1].get<std::string>();
    const Rational t = ParseRational(ev[2], ev[3]);
    if (kind == "arrive") {
      if (has_arrival[v]) throw FormatError("vertex arrives twice");
      has_arrival[v] = true;
      g.arrival_time[v] = t;
    } else if (kind == "depart") {
      if (has_departure[v]) throw FormatError("vertex departs twice");
      has_departure[v] = true;
      g.departure_time[v] = t;
    } else {
      throw FormatError("event kind must be \"arrive\" or \"depart\"");
    }
  }
  for (int v = 0; v < n; ++v) {
    if (!has_arrival[v] || !has_departure[v]) {
      throw FormatError("vertex " + std::to_string(v) +
                        " lacks an arrive or depart event");
    }
  }
  g.adjacency.resize(n);
  const Json& edges = Field(doc, "edges");
  if (!edges.is_array()) throw FormatError("edges must be an array");
  for (const auto& e : edges) {
    const auto [u, v] = IndexPair(e);
    CheckIndex(u, n, "vertex");
    CheckIndex(v, n, "vertex");
    g.adjacency[u].push_back(v);
    if (u != v) g.adjacency[v].push_back(u);
  }
  for (auto& list : g.adjacency) std::sort(list.begin(), list.end());
  return g;
}

Json ToJson(const BipartiteInstance& g) {
  Json doc;
  doc["kind"] = "bipartite";
  doc["sellers"] = g.num_sellers;
  doc["buyers"] = g.num_buyers;
  Json edges = Json::array();
  for (int i = 0; i < g.num_buyers; ++i) {
    for (int j : g.adjacency[i]) edges.push_back({i, j});
  }
  doc["edges"] = std::move(edges);
  doc["arrival_order"] = g.arrival_order;
  if (g.weights) doc["weights"] = *g.weights;
  if (g.capacities) doc["capacities"] = *g.capacities;
  return doc;
}

Json ToJson(const FullyOnlineInstance& g) {
  Json doc;
  doc["kind"] = "fully_online";
  doc["vertices"] = g.num_vertices;
  struct Event {
    Rational time;
    int vertex;
    bool arrive;
  };
  std::vector<Event> events;
  for (int v = 0; v < g.num_vertices; ++v) {
    events.push_back({g.arrival_time[v], v, true});
    events.push_back({g.departure_time[v], v, false});
  }
  std::stable_sort(events.begin(), events.end(),
                   [](const Event& a, const Event& b) {
                     return a.time < b.time;
                   });
  Json ev = Json::array();
  for (const auto& e : events) {
    ev.push_back({e.vertex, e.arrive ? "arrive" : "depart", e.time.num,
                  e.time.den});
  }
  doc["events"] = std::move(ev);
  Json edges = Json::array();
  for (int u = 0; u < g.num_vertices; ++u) {
    for (int v : g.adjacency[u]) {
      if (u < v) edges.push_back({u, v});
    }
  }
  doc["edges"] = std::move(edges);
  return doc;
}

}  // namespace

Instance ParseInstance(std::string_view json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const Json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("instance must be a JSON object");
  const Json& kind = Field(doc, "kind");
  if (!kind.is_string()) throw FormatError("kind must be a string");
  try {
    if (kind == "bipartite") return ParseBipartite(doc);
    if (kind == "fully_online") return ParseFullyOnline(doc);
  } catch (const Json::exception& e) {
    throw FormatError(std::string("invalid instance: ") + e.what());
  }
  throw FormatError("kind must be \"bipartite\" or \"fully_online\"");
}

std::string SerializeInstance(const Instance& instance,
                              std::string_view generator_json) {
  Json doc = std::visit([](const auto& g) { return ToJson(g); }, instance);
  if (!generator_json.empty()) {
    Json gen = Json::parse(generator_json);
    if (!gen.is_object()) {
      throw std::invalid_argument("generator metadata must be a JSON object");
    }
    doc["generator"] = std::move(gen);
  }
  return doc.dump(1) + "\n";
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return buffer.str();
}

void WriteFile(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError("cannot write " + path.string());
}

Instance LoadInstance(const std::filesystem::path& path) {
  return ParseInstance(ReadFile(path));
}

void SaveInstance(const std::filesystem::path& path, const Instance& instance,
                  std::string_view generator_json) {
  WriteFile(path, SerializeInstance(instance, generator_json));
}

RankVector ParseRankVector(std::string_view text) {
  RankVector ranks;
  size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (c == '#') {
      while (pos < text.size() && text[pos] != '\n') ++pos;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++pos;
      continue;
    }
    size_t end = pos;
    while (end < text.size() && text[end] != ',' && text[end] != '#' &&
           !std::isspace(static_cast<unsigned char>(text[end]))) {
      ++end;
    }
    double value = 0.0;
    const char* first = text.data() + pos;
    const char* last = text.data() + end;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
      throw FormatError("bad rank literal \"" +
                        std::string(text.substr(pos, end - pos)) + "\"");
    }
    ranks.values.push_back(value);
    pos = end;
  }
  return ranks;
}

RankVector LoadRankVector(const std::filesystem::path& path) {
  return ParseRankVector(ReadFile(path));
}

}  // namespace ranking
