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

// Command-line front end: generate, oracle, run, check, concentrate.

#ifndef RANKING_TOOLS_CLI_H_
#define RANKING_TOOLS_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ranking/engines.h"
#include "ranking/experiments.h"
#include "ranking/generators.h"
#include "ranking/instance.h"

namespace ranking::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,
  kExitUsage = 2,
  kExitIo = 3,
};

// Everything `concentrate` needs; serializes to JSON without loss.
struct ExperimentConfig {
  std::optional<std::string> instance_path;
  std::optional<GeneratorSpec> generator;
  Engine engine = Engine::kRanking;
  std::optional<double> eps;
  std::optional<Theorem> theorem;
  std::optional<double> rho;
  std::int64_t trials = 100000;
  std::uint64_t master_seed = 1;
  std::vector<double> alphas = DefaultAlphaGrid();
  int oracle_edge_cap = kDefaultBruteForceEdgeCap;
  std::string output;  // empty writes the CSV to stdout

  std::string ToJson() const;
  // Throws FormatError on malformed input.
  static ExperimentConfig FromJson(std::string_view json_text);

  friend bool operator==(const ExperimentConfig&,
                         const ExperimentConfig&) = default;
};

// Instance id used in result rows: the file stem of the instance path, or the
// generator family plus its size parameters.
std::string InstanceId(const ExperimentConfig& config);

// args excludes the program name.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

int Main(int argc, char** argv);

}  // namespace ranking::cli

#endif  // RANKING_TOOLS_CLI_H_
