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

#include "cli.h"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "ranking/instance_io.h"
#include "test_support.h"

namespace ranking::cli {
namespace {

namespace fs = std::filesystem;
using ::testing::HasSubstr;
using ::testing::Not;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ranking_cli_test_" +
            std::string(::testing::UnitTest::GetInstance()
                            ->current_test_info()
                            ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const {
    return (dir_ / name).string();
  }

  fs::path dir_;
};

TEST_F(CliTest, GenerateUpperTriangular) {
  const Result r =
      Invoke({"generate", "upper-triangular", "--n", "20", "-o",
              Path("ut20.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto g = std::get<BipartiteInstance>(LoadInstance(Path("ut20.json")));
  EXPECT_EQ(g.num_sellers, 20);
  EXPECT_EQ(g.num_buyers, 20);
  EXPECT_THAT(ReadFile(Path("ut20.json")), HasSubstr("\"generator\""));
}

TEST_F(CliTest, GenerateFigureOneWithOracle) {
  const Result r = Invoke({"generate", "figure1", "--with-oracle", "-o",
                           Path("fig1.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_THAT(r.out, HasSubstr("oracle_objective: 1e+10"));
  const auto g = std::get<BipartiteInstance>(LoadInstance(Path("fig1.json")));
  EXPECT_EQ(*g.weights, (std::vector<double>{1.0, 1e10}));
}

TEST_F(CliTest, GenerateIsByteDeterministic) {
  const std::vector<std::string> args = {"generate", "random-bipartite",
                                         "--ns", "8", "--nb", "8", "--p",
                                         "0.5", "--seed", "7"};
  const Result a = Invoke(args);
  const Result b = Invoke(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  const Result c = Invoke({"generate", "random-bipartite", "--ns", "8",
                           "--nb", "8", "--p", "0.5", "--seed", "8"});
  EXPECT_NE(a.out, c.out);
}

TEST_F(CliTest, GenerateRejectsBadSpec) {
  EXPECT_EQ(Invoke({"generate", "hexagonal"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"generate", "upper-triangular", "--n", "0"}).code,
            kExitUsage);
  EXPECT_EQ(Invoke({"generate", "random-bipartite", "--ns", "2", "--nb", "2",
                    "--p", "1.5"})
                .code,
            kExitUsage);
  const Result r = Invoke({"generate", "random-bipartite", "--ns", "2",
                           "--nb", "2", "--weights", "5,1"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_THAT(r.err, HasSubstr("error"));
}

TEST_F(CliTest, RunSingleEdge) {
  SaveInstance(Path("edge.json"), testing::SingleEdge());
  const Result r = Invoke({"run", Path("edge.json"), "--engine", "ranking",
                           "--seed", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_THAT(r.out, HasSubstr("objective: 1\n"));
}

TEST_F(CliTest, RunFigureOneWithExplicitRanks) {
  ASSERT_EQ(Invoke({"generate", "figure1", "-o", Path("fig1.json")}).code, 0);
  WriteFile(Path("x.txt"), "0.01\n0.999999999999\n");
  const Result r = Invoke({"run", Path("fig1.json"), "--engine",
                           "vertex_weighted", "--ranks", Path("x.txt")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_THAT(r.out, HasSubstr("objective: 1\n"));
  EXPECT_THAT(r.out, HasSubstr("seller 0 - buyer 0"));
  EXPECT_THAT(r.out, HasSubstr("sum(r) + sum(u) = 1\n"));
}

TEST_F(CliTest, RunIsRepeatable) {
  ASSERT_EQ(Invoke({"generate", "upper-triangular", "--n", "20", "-o",
                    Path("ut20.json")})
                .code,
            0);
  const std::vector<std::string> args = {"run", Path("ut20.json"),
                                         "--engine", "ranking", "--seed",
                                         "42"};
  const Result a = Invoke(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, Invoke(args).out);
}

TEST_F(CliTest, RunRejectsMismatchesAndBadFiles) {
  ASSERT_EQ(Invoke({"generate", "upper-triangular", "--n", "3", "-o",
                    Path("ut3.json")})
                .code,
            0);
  EXPECT_EQ(Invoke({"run", Path("ut3.json"), "--engine", "eps_ranking",
                    "--eps", "0.1"})
                .code,
            kExitUsage);  // no weights
  EXPECT_EQ(
      Invoke({"run", Path("ut3.json"), "--engine", "fully_online"}).code,
      kExitUsage);
  WriteFile(Path("bad.txt"), "0.1 zero 0.3");
  EXPECT_EQ(Invoke({"run", Path("ut3.json"), "--engine", "ranking",
                    "--ranks", Path("bad.txt")})
                .code,
            kExitIo);
  EXPECT_EQ(Invoke({"run", Path("missing.json"), "--engine", "ranking"}).code,
            kExitIo);
  WriteFile(Path("broken.json"), "{\"kind\": ");
  EXPECT_EQ(Invoke({"run", Path("broken.json"), "--engine", "ranking"}).code,
            kExitIo);
}

TEST_F(CliTest, OracleReportsOptimum) {
  ASSERT_EQ(Invoke({"generate", "figure1", "-o", Path("fig1.json")}).code, 0);
  EXPECT_THAT(Invoke({"oracle", Path("fig1.json")}).out,
              HasSubstr("objective: 1e+10"));
  EXPECT_THAT(Invoke({"oracle", Path("fig1.json"), "--cardinality"}).out,
              HasSubstr("objective: 1\n"));
  ASSERT_EQ(Invoke({"generate", "random-fully-online", "--n", "12", "--p",
                    "1", "--seed", "3", "-o", Path("fo.json")})
                .code,
            0);
  EXPECT_EQ(Invoke({"oracle", Path("fo.json"), "--cap", "3"}).code,
            kExitUsage);
  EXPECT_EQ(Invoke({"oracle", Path("fo.json"), "--cap", "200"}).code,
            kExitOk);
}

TEST_F(CliTest, CheckBoundedDifferenceSuite) {
  const Result r = Invoke({"check", "L3", "--cases", "10000", "--seed", "1"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_THAT(r.out, Not(HasSubstr(",false,")));
}

TEST_F(CliTest, CheckWeightedBoundColumn) {
  const Result r = Invoke({"check", "L7", "--eps", "0.25", "--cases",
                           "10000", "-o", Path("l7.csv")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  std::istringstream csv(ReadFile(Path("l7.csv")));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "lemma_id,engine,seed,holds,f_x,f_xprime,bound");
  int rows = 0;
  while (std::getline(csv, line)) {
    ++rows;
    const double bound = std::stod(line.substr(line.rfind(',') + 1));
    ASSERT_GE(bound, 9.0 * (1 - 1e-12));
    ASSERT_LE(bound, 9.0 * 1e4 * (1 + 1e-12));
  }
  EXPECT_EQ(rows, 10000);
}

TEST_F(CliTest, CheckSingleRemovalCase) {
  const Result r = Invoke({"check", "L4", "--cases", "1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_THAT(r.out, HasSubstr("L4,ranking,"));
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 2);
}

TEST_F(CliTest, CheckRejectsUnknownLemmaAndZeroCases) {
  EXPECT_EQ(Invoke({"check", "L11"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"check", "L3", "--cases", "0"}).code, kExitUsage);
}

TEST_F(CliTest, ConcentrateUpperTriangularTwenty) {
  ASSERT_EQ(Invoke({"generate", "upper-triangular", "--n", "20", "-o",
                    Path("ut20.json")})
                .code,
            0);
  const Result r = Invoke({"concentrate", Path("ut20.json"), "--trials",
                           "100000", "-o", Path("ut20.csv")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  const std::string csv = ReadFile(Path("ut20.csv"));
  EXPECT_THAT(csv, Not(HasSubstr(",false,")));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 11);
  EXPECT_THAT(r.out, HasSubstr("empirical_tail"));  // summary table
}

TEST_F(CliTest, ConcentrateDisjointPerfectHasZeroTails) {
  ASSERT_EQ(Invoke({"generate", "disjoint-perfect", "--n", "10", "-o",
                    Path("dp.json")})
                .code,
            0);
  const Result r =
      Invoke({"concentrate", Path("dp.json"), "--trials", "2000"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream csv(r.out);
  std::string line;
  std::getline(csv, line);
  while (std::getline(csv, line)) {
    // empirical_tail is the eighth column.
    std::istringstream fields(line);
    std::string field;
    for (int k = 0; k < 8; ++k) std::getline(fields, field, ',');
    EXPECT_EQ(field, "0") << line;
  }
}

TEST_F(CliTest, ConcentrateIsByteIdenticalAcrossRunsAndThreads) {
  ASSERT_EQ(Invoke({"generate", "random-fully-online", "--n", "10", "--p",
                    "0.4", "--seed", "2", "-o", Path("fo.json")})
                .code,
            0);
  const Result a = Invoke({"concentrate", Path("fo.json"), "--engine",
                           "fully_online", "--trials", "20000",
                           "--threads", "1", "--save-config",
                           Path("cfg.json")});
  const Result b = Invoke({"concentrate", Path("fo.json"), "--engine",
                           "fully_online", "--trials", "20000",
                           "--threads", "4"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  const Result c = Invoke({"concentrate", "--config", Path("cfg.json"),
                           "--threads", "3"});
  EXPECT_EQ(c.out, a.out);
}

TEST_F(CliTest, ConcentrateFromGeneratorConfig) {
  ExperimentConfig config;
  GeneratorSpec spec;
  spec.family = Family::kFigure1;
  config.generator = spec;
  config.engine = Engine::kEpsRanking;
  config.trials = 5000;
  config.output = Path("fig1.csv");
  WriteFile(Path("cfg.json"), config.ToJson());
  const Result r = Invoke({"concentrate", "--config", Path("cfg.json")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_THAT(ReadFile(Path("fig1.csv")), HasSubstr("figure1,eps_ranking,"));
  // An explicit flag overrides the file.
  const Result s = Invoke({"concentrate", "--config", Path("cfg.json"),
                           "--trials", "1000", "-o", Path("small.csv")});
  EXPECT_EQ(s.code, kExitOk) << s.err;
  EXPECT_THAT(ReadFile(Path("small.csv")), HasSubstr(",1000,"));
}

TEST_F(CliTest, ConcentrateErrors) {
  EXPECT_EQ(Invoke({"concentrate"}).code, kExitUsage);
  WriteFile(Path("cfg.json"), "{\"engine\": 5}");
  EXPECT_EQ(Invoke({"concentrate", "--config", Path("cfg.json")}).code,
            kExitIo);
  ASSERT_EQ(Invoke({"generate", "random-fully-online", "--n", "12", "--p",
                    "1", "--seed", "3", "-o", Path("fo.json")})
                .code,
            0);
  // Dense 12-vertex instance exceeds the default exhaustive-oracle cap.
  EXPECT_EQ(Invoke({"concentrate", Path("fo.json"), "--engine",
                    "fully_online", "--trials", "10"})
                .code,
            kExitUsage);
}

TEST(ExperimentConfigTest, RoundTripsLosslessly) {
  ExperimentConfig config;
  GeneratorSpec spec;
  spec.family = Family::kRandomBipartite;
  spec.n_sellers = 7;
  spec.n_buyers = 9;
  spec.p = 0.3;
  spec.seed = 18446744073709551557ULL;
  spec.weights = WeightRange{1.0, 1e4};
  spec.plant_perfect_matching = true;
  config.generator = spec;
  config.engine = Engine::kEpsRanking;
  config.eps = 0.1;
  config.theorem = Theorem::kT3;
  config.rho = 0.6;
  config.trials = 12345;
  config.master_seed = 0xdeadbeefcafef00dULL;
  config.alphas = {0.05, 0.1 + 0.2, 1.0 / 3.0};
  config.oracle_edge_cap = 40;
  config.output = "out.csv";
  EXPECT_EQ(ExperimentConfig::FromJson(config.ToJson()), config);

  ExperimentConfig path_only;
  path_only.instance_path = "instances/ut20.json";
  EXPECT_EQ(ExperimentConfig::FromJson(path_only.ToJson()), path_only);
  EXPECT_EQ(InstanceId(path_only), "ut20");
  EXPECT_EQ(InstanceId(config), "random_bipartite_7x9_p0.3_s" +
                                    std::to_string(spec.seed));
}

TEST(CliUsageTest, ExitCodes) {
  EXPECT_EQ(Invoke({}).code, kExitUsage);
  EXPECT_EQ(Invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"--help"}).code, kExitOk);
  EXPECT_EQ(Invoke({"run", "x.json"}).code, kExitUsage);  // --engine missing
  EXPECT_EQ(Invoke({"--format", "parquet", "check", "L3"}).code, kExitUsage);
  EXPECT_THAT(Invoke({"--help"}).out, HasSubstr("concentrate"));
}

}  // namespace
}  // namespace ranking::cli
