// Copyright 2026 The cushLEPOR Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cushlepor/cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cushlepor/corpus.h"
#include "cushlepor/presets.h"
#include "json.hpp"
#include "testing/generators.h"

namespace cushlepor::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome RunCli(std::vector<std::string> args) {
  args.insert(args.begin(), "cushlepor");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = Run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("cushlepor_cli_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);

    Corpus identity;
    for (int i = 0; i < 6; ++i) {
      const std::string text = "sentence number " + std::to_string(i) + " is here .";
      identity.records.push_back(
          {std::to_string(i), i % 2 ? "A" : "B", std::nullopt, text, text, {}});
    }
    WriteCorpus(identity, path("identity.tsv"), CorpusFormat::kTsv);

    Corpus synthetic = testing::SyntheticCorpus(61, 60, 2);
    testing::AttachMetricGold(synthetic, LookupPreset("zh-en:psqm").params, "gold");
    for (auto& r : synthetic.records) r.gold["other"] = r.gold["gold"] * 0.5;
    WriteCorpus(synthetic, path("synthetic.tsv"), CorpusFormat::kTsv);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, ScoreIdentityCorpus) {
  const Outcome r = RunCli({"score", "--input", path("identity.tsv"), "--preset", "en-de"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc["segments"].size(), 6u);
  for (const auto& seg : doc["segments"]) EXPECT_EQ(seg["score"].get<double>(), 1.0);
  EXPECT_NE(r.err.find("scored 6 segments"), std::string::npos);
}

TEST_F(CliTest, UnknownPresetListsAlternatives) {
  const Outcome r = RunCli({"score", "--input", path("identity.tsv"), "--preset", "xx-yy"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("error[usage]"), std::string::npos);
  EXPECT_NE(r.err.find("en-de:cushlepor_psqm"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("en-cs:default"), std::string::npos);
}

TEST_F(CliTest, ParameterSources) {
  const std::string input = path("identity.tsv");
  EXPECT_EQ(RunCli({"score", "--input", input}).code, kExitUsage);
  EXPECT_EQ(RunCli({"score", "--input", input, "--preset", "en-de", "--alpha", "2"}).code,
            kExitUsage);
  EXPECT_EQ(RunCli({"score", "--input", input, "--alpha", "1", "--beta", "1", "--n",
                    "2", "--weight-elp", "1", "--weight-pos", "1"})
                .code,
            kExitUsage);
  EXPECT_EQ(RunCli({"score", "--input", input, "--alpha", "1", "--beta", "1", "--n",
                    "2", "--weight-elp", "1", "--weight-pos", "1", "--weight-pr", "1"})
                .code,
            kExitOk);
  EXPECT_EQ(RunCli({"score", "--input", input, "--alpha", "-1", "--beta", "1", "--n",
                    "2", "--weight-elp", "1", "--weight-pos", "1", "--weight-pr", "1"})
                .code,
            kExitUsage);
}

TEST_F(CliTest, PresetsListing) {
  const Outcome r = RunCli({"presets"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("14 presets"), std::string::npos);
  std::istringstream lines(r.out);
  std::string line;
  int rows = 0;
  bool en_cs = false, zh_lm = false;
  while (std::getline(lines, line)) {
    if (line.rfind("preset", 0) == 0 || line.find("presets") != std::string::npos) continue;
    ++rows;
    std::istringstream fields(line);
    std::string name, a, b, n, e, p, r2;
    fields >> name >> a >> b >> n >> e >> p >> r2;
    if (name == "en-cs:default") {
      en_cs = (a + b + n + e + p + r2) == "912217";
    }
    if (name == "zh-en:cushlepor_lm") {
      zh_lm = a == "2.85" && b == "4.73" && n == "1" && e == "1.01" && p == "11.13" &&
              r2 == "4.62";
    }
  }
  EXPECT_EQ(rows, 14);
  EXPECT_TRUE(en_cs) << r.out;
  EXPECT_TRUE(zh_lm) << r.out;
}

TEST_F(CliTest, DataErrorsExitTwo) {
  const Outcome missing_gold = RunCli({"tune", "--input", path("synthetic.tsv"), "--gold",
                                       "labse", "--budget", "3", "--seed", "1", "--out",
                                       path("t")});
  EXPECT_EQ(missing_gold.code, kExitData);
  EXPECT_NE(missing_gold.err.find("'labse'"), std::string::npos) << missing_gold.err;

  std::ofstream(path("bad.tsv")) << "seg_id\tsystem_id\thypothesis\treference\n1\tA\t \tx\n";
  const Outcome bad =
      RunCli({"score", "--input", path("bad.tsv"), "--preset", "en-de", "--strict"});
  EXPECT_EQ(bad.code, kExitData);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos) << bad.err;
}

TEST_F(CliTest, UsageErrorsExitOne) {
  const std::string input = path("synthetic.tsv");
  EXPECT_EQ(RunCli({}).code, kExitUsage);
  EXPECT_EQ(RunCli({"score", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"tune", "--input", input, "--gold", "gold", "--budget", "0"}).code,
            kExitUsage);
  EXPECT_EQ(RunCli({"tune", "--input", input}).code, kExitUsage);
  EXPECT_EQ(RunCli({"tune", "--input", input, "--gold", "gold", "--gamma", "1.5"}).code,
            kExitUsage);
  EXPECT_EQ(RunCli({"tune", "--input", input, "--gold", "gold", "--space-real", "5:1"}).code,
            kExitUsage);
  EXPECT_EQ(RunCli({"--help"}).code, kExitOk);
}

TEST_F(CliTest, TuneIsReproducibleWithFixedSeed) {
  for (const char* name : {"a", "b"}) {
    const Outcome r = RunCli({"tune", "--input", path("synthetic.tsv"), "--gold", "gold",
                              "--budget", "30", "--seed", "17", "--out", path(name)});
    ASSERT_EQ(r.code, kExitOk) << r.err;
  }
  for (const char* file : {"best.preset", "trials.jsonl"}) {
    const std::string a = Slurp(dir_ / "a" / file);
    ASSERT_FALSE(a.empty());
    EXPECT_EQ(a, Slurp(dir_ / "b" / file)) << file;
  }
  const auto summary = nlohmann::json::parse(Slurp(dir_ / "a" / "summary.json"));
  EXPECT_EQ(summary["seed"].get<std::uint64_t>(), 17u);
  EXPECT_EQ(summary["budget"].get<int>(), 30);
  EXPECT_EQ(LoadPresetFile(dir_ / "a" / "best.preset").seed, 17u);
}

TEST_F(CliTest, TuneWithoutSeedAnnouncesOne) {
  const Outcome r = RunCli({"tune", "--input", path("synthetic.tsv"), "--gold", "gold",
                            "--tuner", "random", "--budget", "4", "--split-holdout",
                            "--out", path("r")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.err.find("cushlepor: seed = "), std::string::npos);
  EXPECT_NE(r.out.find("heldout RMSE"), std::string::npos) << r.out;
  EXPECT_TRUE(fs::exists(dir_ / "r" / "summary.json"));
}

TEST_F(CliTest, TunedPresetFeedsBackIntoScore) {
  ASSERT_EQ(RunCli({"tune", "--input", path("synthetic.tsv"), "--gold", "gold", "--budget",
                    "5", "--seed", "3", "--out", path("t"), "--quiet"})
                .code,
            kExitOk);
  const Outcome r = RunCli({"score", "--input", path("synthetic.tsv"), "--params-file",
                            path("t/best.preset"), "--quiet"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.err.empty());
}

TEST_F(CliTest, ConfigFileDefersToCommandLine) {
  std::ofstream(path("run.cfg")) << "# scoring run\npreset = en-de:cushlepor_psqm\n"
                                    "gold = gold\nquiet = true\n";
  const Outcome from_file =
      RunCli({"score", "--config", path("run.cfg"), "--input", path("synthetic.tsv")});
  ASSERT_EQ(from_file.code, kExitOk) << from_file.err;
  EXPECT_TRUE(from_file.err.empty());
  EXPECT_NE(from_file.out.find("en-de:cushlepor_psqm"), std::string::npos);

  const Outcome override = RunCli({"score", "--config", path("run.cfg"), "--input",
                                   path("synthetic.tsv"), "--preset", "zh-en:psqm"});
  ASSERT_EQ(override.code, kExitOk) << override.err;
  EXPECT_NE(override.out.find("zh-en:cushlepor_psqm"), std::string::npos);
  EXPECT_EQ(override.out.find("en-de:cushlepor_psqm"), std::string::npos);

  std::ofstream(path("bad.cfg")) << "budget = 3\n";
  EXPECT_EQ(RunCli({"score", "--config", path("bad.cfg"), "--input",
                    path("synthetic.tsv"), "--preset", "en-de"})
                .code,
            kExitUsage);
}

TEST_F(CliTest, ReportComparesColumns) {
  const Outcome r =
      RunCli({"report", "--input", path("synthetic.tsv"), "--preset", "zh-en:psqm",
              "--gold", "gold", "--compare-column", "other"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc["agreement"].size(), 2u);
  EXPECT_EQ(doc["agreement"][0]["rmse"].get<double>(), 0.0);
  EXPECT_NE(r.err.find("other vs gold"), std::string::npos) << r.err;

  EXPECT_EQ(RunCli({"report", "--input", path("synthetic.tsv"), "--preset", "en-de"}).code,
            kExitUsage);
}

TEST_F(CliTest, CsvReportNeedsOutAndCreatesDirectories) {
  const std::string input = path("identity.tsv");
  EXPECT_EQ(RunCli({"score", "--input", input, "--preset", "en-de", "--report-format",
                    "csv"})
                .code,
            kExitUsage);
  ASSERT_EQ(RunCli({"score", "--input", input, "--preset", "en-de", "--report-format",
                    "csv", "--out", path("deep/csv")})
                .code,
            kExitOk);
  EXPECT_FALSE(fs::is_empty(dir_ / "deep" / "csv"));
  ASSERT_EQ(RunCli({"score", "--input", input, "--preset", "en-de", "--out",
                    path("nested/report.json")})
                .code,
            kExitOk);
  EXPECT_TRUE(fs::exists(dir_ / "nested" / "report.json"));
}

}  // namespace
}  // namespace cushlepor::cli
