// Copyright 2026 The nmr Authors. All Rights Reserved.
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

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "nmr/io/json.h"

namespace nmr {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "nmr");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(NMR_DATA_DIR) + "/" + name; }

std::string golden(const std::string& name) {
  std::ifstream in(std::string(NMR_GOLDEN_DIR) + "/" + name);
  EXPECT_TRUE(in) << name;
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct GoldenCase {
  std::string file;
  std::vector<std::string> args;
  int code = 0;
};

TEST(CliTest, Goldens) {
  const std::vector<GoldenCase> cases{
      {"extensions_nixon.txt", {"extensions", data("nixon.dt")}},
      {"extensions_tweety.json", {"extensions", data("tweety.dt"), "--format", "json"}},
      {"query_nixon_credulous.txt", {"query", data("nixon.dt"), "~pacifist", "--mode", "credulous"}},
      {"warrant_fair_lottery_gate_on.json", {"warrant", "fair_lottery", "--n", "5", "--gate", "on", "--format", "json"}},
      {"warrant_unfair_lottery.txt", {"warrant", "unfair_lottery", "--format", "text"}},
      {"warrant_preface.csv", {"warrant", data("preface.dt"), "--format", "csv"}},
      {"verify_eq16_paper.txt", {"verify", "eq16", "--q", "1/10", "--n", "5", "--mode", "paper"}},
      {"verify_eq5.json", {"verify", "eq5", "--format", "json"}},
      {"verify_eq10.txt", {"verify", "eq10"}},
      {"verify_eq18_exact.txt", {"verify", "eq18", "--q", "1/10", "--mode", "exact"}},
      {"scenario_list.txt", {"scenario", "list"}},
      {"scenario_dump_korb.dt", {"scenario", "dump", "korb"}},
  };
  for (const auto& c : cases) {
    const Outcome o = run(c.args);
    EXPECT_EQ(o.code, c.code) << c.file << "\n" << o.err;
    EXPECT_EQ(o.out, golden(c.file)) << c.file;
    // Deterministic across runs.
    EXPECT_EQ(run(c.args).out, o.out) << c.file;
  }
}

TEST(CliTest, SkepticalNixon) {
  const Outcome o = run({"query", data("nixon.dt"), "pacifist", "--mode", "skeptical"});
  EXPECT_EQ(o.code, cli::kFalse);
  EXPECT_EQ(o.out.substr(0, 5), "false");
  EXPECT_EQ(run({"query", data("nixon.dt"), "quaker", "--mode", "skeptical"}).code, cli::kOk);
}

TEST(CliTest, LotteryizationValue) {
  const Outcome o = run({"verify", "eq16", "--q", "1/10", "--n", "5", "--mode", "paper", "--format", "json"});
  ASSERT_EQ(o.code, cli::kOk);
  const Json j = Json::parse(o.out);
  EXPECT_EQ(j["value"], "2/3");
}

TEST(CliTest, FairLotteryJson) {
  const Outcome o = run({"warrant", "fair_lottery", "--n", "5", "--gate", "on", "--format", "json"});
  ASSERT_EQ(o.code, cli::kOk);
  const Json j = Json::parse(o.out);
  for (int i = 0; i < 5; ++i) EXPECT_EQ(j["entries"][i]["status"], "collectively_defeated");
}

TEST(CliTest, DumpRoundTrip) {
  const Outcome dumped = run({"scenario", "dump", "unfair_lottery"});
  ASSERT_EQ(dumped.code, cli::kOk);
  const std::string path = ::testing::TempDir() + "nmr_unfair.dt";
  std::ofstream(path) << dumped.out;
  EXPECT_EQ(run({"warrant", path}).out, run({"warrant", "unfair_lottery"}).out);
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(run({"extensions", data("missing.dt")}).code, cli::kInputError);
  EXPECT_EQ(run({"warrant", "nonsense"}).code, cli::kInputError);
  EXPECT_EQ(run({"verify", "eq99"}).code, cli::kInputError);
  EXPECT_EQ(run({"warrant", "fair_lottery", "--threshold", "2"}).code, cli::kInputError);
  EXPECT_EQ(run({"warrant", data("nixon.dt"), "--n", "3"}).code, cli::kInputError);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kInputError);
  EXPECT_EQ(run({"extensions", data("nixon.dt"), "--max-defaults", "1"}).code, cli::kLimit);
  EXPECT_EQ(run({"verify", "eq16", "--q", "1/10", "--n", "5", "--mode", "sideways"}).code, cli::kInputError);

  const std::string path = ::testing::TempDir() + "nmr_bad.dt";
  std::ofstream(path) << "fact: a &.\n";
  const Outcome bad = run({"extensions", path});
  EXPECT_EQ(bad.code, cli::kInputError);
  EXPECT_NE(bad.err.find(path + ":1:"), std::string::npos) << bad.err;
  EXPECT_EQ(bad.err.rfind("nmr: error: ", 0), 0u) << bad.err;
}

TEST(CliTest, Verify) {
  for (const char* check : {"eq5", "eq10", "eq15", "eq16", "eq18", "preface-defeater", "unfair-lottery",
                            "condition-probability", "lottery-value", "warrant-threshold"})
    for (const char* format : {"text", "json", "csv"})
      EXPECT_EQ(run({"verify", check, "--format", format}).code, cli::kOk) << check << " " << format;
  EXPECT_EQ(run({"verify", "eq15", "--q", "1/10", "--n", "5", "--format", "json"}).code, cli::kOk);
}

}  // namespace
}  // namespace nmr
