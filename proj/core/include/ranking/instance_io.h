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

// JSON instance files and plain-text rank files.
//
// Bipartite:
//   {"kind": "bipartite", "sellers": n, "buyers": m,
//    "edges": [[buyer, seller], ...], "arrival_order": [...],
//    "weights": [...], "capacities": [...]}        (last two optional)
// Fully online:
//   {"kind": "fully_online", "vertices": n,
//    "events": [[vertex, "arrive" | "depart", num, den], ...],
//    "edges": [[u, v], ...]}
//
// Unknown top-level keys are ignored on input. A "generator" object is written
// as provenance when the instance came from a generator.

#ifndef RANKING_INSTANCE_IO_H_
#define RANKING_INSTANCE_IO_H_

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ranking/instance.h"

namespace ranking {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws FormatError on malformed JSON, missing fields or a field of the
// wrong type. Structural invariants are left to Validate().
Instance ParseInstance(std::string_view json_text);

// Deterministic output: edges sorted, events in time order. When non-empty,
// `generator_json` must be a JSON object and is stored under "generator".
std::string SerializeInstance(const Instance& instance,
                              std::string_view generator_json = {});

Instance LoadInstance(const std::filesystem::path& path);
void SaveInstance(const std::filesystem::path& path, const Instance& instance,
                  std::string_view generator_json = {});

// Decimal literals separated by whitespace and/or commas; '#' starts a
// comment running to end of line. Throws FormatError on a bad token. Range
// checks are left to the engines.
RankVector ParseRankVector(std::string_view text);
RankVector LoadRankVector(const std::filesystem::path& path);

std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, std::string_view contents);

}  // namespace ranking

#endif  // RANKING_INSTANCE_IO_H_
