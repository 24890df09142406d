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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "cushlepor/errors.h"
#include "cushlepor/objective.h"
#include "cushlepor/parzen.h"
#include "cushlepor/presets.h"
#include "cushlepor/rng.h"
#include "cushlepor/search_space.h"
#include "cushlepor/tuner.h"
#include "oracle/naive_hlepor.h"
#include "testing/generators.h"

namespace cushlepor {
namespace {

double Quadratic(const HLeporParams& p) {
  const double d[] = {p.alpha - 5, p.beta - 5, p.weight_elp - 5,
                      p.weight_pos - 5, p.weight_pr - 5,
                      static_cast<double>(p.n - 2)};
  double sum = 0.0;
  for (double v : d) sum += v * v;
  return sum;
}

bool SameLog(const std::vector<Trial>& a, const std::vector<Trial>& b) {
  return FormatTrialLog(a) == FormatTrialLog(b);
}

TEST(RngTest, DeterministicAndInRange) {
  Rng a(99), b(99);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(a.NextU64(), b.NextU64());
  Rng r(1);
  std::map<int, int> counts;
  for (int i = 0; i < 40000; ++i) {
    const double u = r.Uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    ++counts[r.UniformInt(1, 4)];
  }
  ASSERT_EQ(counts.size(), 4u);
  for (const auto& [k, v] : counts) EXPECT_NEAR(v, 10000, 400) << k;
}

TEST(RngTest, NormalMoments) {
  Rng r(2);
  double sum = 0, sq = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double z = r.Normal();
    sum += z;
    sq += z * z;
  }
  EXPECT_NEAR(sum / n, 0.0, 0.02);
  EXPECT_NEAR(sq / n, 1.0, 0.02);
}

TEST(RngTest, Categorical) {
  Rng r(3);
  const double w[] = {1.0, 0.0, 3.0};
  int counts[3] = {0, 0, 0};
  for (int i = 0; i < 40000; ++i) ++counts[r.Categorical(w)];
  EXPECT_EQ(counts[1], 0);
  EXPECT_NEAR(counts[0], 10000, 400);
  EXPECT_NEAR(counts[2], 30000, 400);
}

TEST(SearchSpaceTest, ValidationAndSampling) {
  SearchSpace space;
  EXPECT_NO_THROW(ValidateSpace(space));
  SearchSpace bad = space;
  bad.beta = {5.0, 5.0};
  EXPECT_THROW(ValidateSpace(bad), UsageError);
  bad = space;
  bad.alpha = {0.0, 2.0};
  EXPECT_THROW(ValidateSpace(bad), UsageError);
  bad = space;
  bad.n = {3, 2};
  EXPECT_THROW(ValidateSpace(bad), UsageError);
  bad = space;
  bad.n = {0, 2};
  EXPECT_THROW(ValidateSpace(bad), UsageError);

  Rng rng(4);
  space.weight_pos = {2.0, 3.0};
  space.n = {2, 3};
  for (int i = 0; i < 2000; ++i) {
    const HLeporParams p = SampleUniform(space, rng);
    ASSERT_TRUE(Contains(space, p));
    ASSERT_GE(p.weight_pos, 2.0);
    ASSERT_LE(p.weight_pos, 3.0);
  }
}

TEST(ParzenTest, AdaptiveBandwidths) {
  const double obs[] = {10.0, 3.0, 5.0};
  const TruncatedParzen p(obs, 1.0, 15.0, 1.0);
  EXPECT_EQ(p.centers(), (std::vector<double>{3.0, 5.0, 10.0}));
  EXPECT_EQ(p.bandwidths(), (std::vector<double>{2.0, 5.0, 5.0}));

  const double dup[] = {5.0, 5.0, 5.0};
  const TruncatedParzen q(dup, 1.0, 15.0, 1.0);
  EXPECT_EQ(q.bandwidths()[0], 4.0);
  EXPECT_NEAR(q.bandwidths()[1], 0.14, 1e-15);
  EXPECT_EQ(q.bandwidths()[2], 10.0);
}

TEST(ParzenTest, DensityIntegratesToOneAndSamplesStayInside) {
  const double obs[] = {1.0, 1.2, 7.5, 14.9, 15.0};
  const TruncatedParzen p(obs, 1.0, 15.0, 1.0);
  const int steps = 200000;
  const double h = 14.0 / steps;
  double integral = 0.0;
  for (int i = 0; i < steps; ++i) integral += p.Density(1.0 + (i + 0.5) * h) * h;
  EXPECT_NEAR(integral, 1.0, 1e-4);
  EXPECT_EQ(p.Density(0.5), 0.0);

  Rng rng(5);
  for (int i = 0; i < 10000; ++i) {
    const double x = p.Sample(rng);
    ASSERT_GE(x, 1.0);
    ASSERT_LE(x, 15.0);
  }
  const TruncatedParzen prior_only({}, 1.0, 15.0, 1.0);
  EXPECT_NEAR(prior_only.Density(3.0), 1.0 / 14.0, 1e-15);
}

TEST(ParzenTest, SmoothedCategorical) {
  const int obs[] = {2, 2, 3};
  const SmoothedCategorical c(obs, 1, 4, 1.0);
  EXPECT_NEAR(c.Probability(1), 0.25 / 4.0, 1e-15);
  EXPECT_NEAR(c.Probability(2), 2.25 / 4.0, 1e-15);
  EXPECT_NEAR(c.Probability(3), 1.25 / 4.0, 1e-15);
  EXPECT_EQ(c.Probability(5), 0.0);
  Rng rng(6);
  for (int i = 0; i < 1000; ++i) {
    const int v = c.Sample(rng);
    ASSERT_GE(v, 1);
    ASSERT_LE(v, 4);
  }
}

TEST(RandomSearchTest, BudgetOne) {
  const TuneResult r = TuneRandom(Quadratic, SearchSpace{}, 1, 8);
  ASSERT_EQ(r.trials.size(), 1u);
  EXPECT_EQ(r.best.params, r.trials[0].params);
  EXPECT_EQ(r.best.objective, r.trials[0].objective);
}

TEST(RandomSearchTest, SameSeedSameLogAndThreadsDoNotMatter) {
  const TuneResult a = TuneRandom(Quadratic, SearchSpace{}, 100, 9);
  const TuneResult b = TuneRandom(Quadratic, SearchSpace{}, 100, 9);
  EXPECT_TRUE(SameLog(a.trials, b.trials));
  TuneOptions o;
  o.threads = 7;
  EXPECT_TRUE(SameLog(a.trials, TuneRandom(Quadratic, SearchSpace{}, 100, 9, o).trials));
  EXPECT_FALSE(SameLog(a.trials, TuneRandom(Quadratic, SearchSpace{}, 100, 10).trials));
}

TEST(RandomSearchTest, ConstantObjective) {
  const TuneResult r =
      TuneRandom([](const HLeporParams&) { return 0.42; }, SearchSpace{}, 50, 1);
  EXPECT_EQ(r.best.objective, 0.42);
  EXPECT_EQ(r.best.index, 0u);
}

TEST(RandomSearchTest, RejectsBadBudgetAndObjective) {
  EXPECT_THROW(TuneRandom(Quadratic, SearchSpace{}, 0, 1), UsageError);
  EXPECT_THROW(TuneRandom([](const HLeporParams&) { return -1.0; },
                          SearchSpace{}, 3, 1),
               DataError);
  EXPECT_THROW(TuneRandom([](const HLeporParams&) { return std::nan(""); },
                          SearchSpace{}, 3, 1),
               DataError);
}

TEST(TpeTest, ConfigValidation) {
  EXPECT_NO_THROW(ValidateTpeConfig(TpeConfig{}));
  TpeConfig c;
  c.gamma = 1.0;
  EXPECT_THROW(ValidateTpeConfig(c), UsageError);
  c = TpeConfig{};
  c.n_candidates = 0;
  EXPECT_THROW(ValidateTpeConfig(c), UsageError);
  c = TpeConfig{};
  c.budget = 0;
  EXPECT_THROW(ValidateTpeConfig(c), UsageError);
  c = TpeConfig{};
  c.prior_weight = 0.0;
  EXPECT_THROW(ValidateTpeConfig(c), UsageError);
}

TEST(TpeTest, WarmupMatchesRandomSearch) {
  for (int budget : {1, 5, 20}) {
    TpeConfig c;
    c.budget = budget;
    c.n_startup = 20;
    c.seed = 123;
    EXPECT_TRUE(SameLog(TuneTpe(Quadratic, SearchSpace{}, c).trials,
                        TuneRandom(Quadratic, SearchSpace{}, budget, 123).trials))
        << budget;
  }
  // The warmup prefix of a longer run is the same draw sequence too.
  TpeConfig c;
  c.budget = 60;
  c.seed = 5;
  const auto tpe = TuneTpe(Quadratic, SearchSpace{}, c).trials;
  const auto rnd = TuneRandom(Quadratic, SearchSpace{}, 20, 5).trials;
  EXPECT_TRUE(SameLog({tpe.begin(), tpe.begin() + 20}, rnd));
}

TEST(TpeTest, ReproducibleContainedAndAnytimeMonotone) {
  SearchSpace space;
  space.alpha = {2.0, 6.0};
  space.n = {1, 3};
  TpeConfig c;
  c.budget = 80;
  c.seed = 77;
  const TuneResult a = TuneTpe(Quadratic, space, c);
  const TuneResult b = TuneTpe(Quadratic, space, c);
  EXPECT_TRUE(SameLog(a.trials, b.trials));
  double running = a.trials.front().objective;
  double previous = running;
  for (const Trial& t : a.trials) {
    ASSERT_TRUE(Contains(space, t.params));
    running = std::min(running, t.objective);
    ASSERT_LE(running, previous);
    previous = running;
    ASSERT_FALSE(t.wall_time.has_value());
  }
  EXPECT_EQ(a.best.objective, running);
}

TEST(TpeTest, ZeroStartupStillWorks) {
  TpeConfig c;
  c.budget = 10;
  c.n_startup = 0;
  EXPECT_EQ(TuneTpe(Quadratic, SearchSpace{}, c).trials.size(), 10u);
}

TEST(TpeTest, BeatsRandomOnQuadraticMedian) {
  std::vector<double> tpe, rnd;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    TpeConfig c;
    c.budget = 200;
    c.seed = seed;
    tpe.push_back(TuneTpe(Quadratic, SearchSpace{}, c).best.objective);
    rnd.push_back(TuneRandom(Quadratic, SearchSpace{}, 200, seed).best.objective);
  }
  std::sort(tpe.begin(), tpe.end());
  std::sort(rnd.begin(), rnd.end());
  EXPECT_LE(tpe[5], rnd[5]);
}

TEST(TrialLogTest, RoundTripAndTiming) {
  TuneOptions o;
  o.record_timing = true;
  const TuneResult r = TuneRandom(Quadratic, SearchSpace{}, 5, 3, o);
  for (const Trial& t : r.trials) ASSERT_TRUE(t.wall_time.has_value());
  const std::string log = FormatTrialLog(r.trials);
  EXPECT_EQ(FormatTrialLog(ParseTrialLog(log)), log);
  EXPECT_THROW(ParseTrialLog("{\"index\": 1}\n"), DataError);

  const TuneResult plain = TuneRandom(Quadratic, SearchSpace{}, 2, 3);
  EXPECT_NE(FormatTrialLog(plain.trials).find("\"wall_time\":null"),
            std::string::npos);
}

TEST(ObjectiveTest, SelfAgreementIsZero) {
  Corpus c = testing::SyntheticCorpus(51, 80, 3);
  const HLeporParams p = LookupPreset("zh-en:psqm").params;
  testing::AttachMetricGold(c, p, "self");
  EXPECT_EQ(Objective(c, "self", kUnitScale, p), 0.0);
  EXPECT_GT(Objective(c, "self", kUnitScale, HLeporParams{}), 0.0);
}

TEST(ObjectiveTest, SingleResidual) {
  Corpus c;
  SegmentRecord r;
  r.seg_id = "1";
  r.system_id = "A";
  r.hypothesis = "a c b";
  r.reference = "a b c";
  const HLeporParams unit{1, 1, 2, 1, 1, 1};
  const double metric = Hlepor(r.hypothesis, r.reference, unit).score;
  r.gold["g"] = (metric - 0.2) * 6.0;  // on the 0..6 scale
  c.records.push_back(r);
  EXPECT_NEAR(Objective(c, "g", kPsqmScale, unit), 0.2, 1e-12);
}

TEST(ObjectiveTest, ThreeSegmentHandComputed) {
  const HLeporParams unit{1, 1, 2, 1, 1, 1};
  const oracle::Params q{1, 1, 2, 1, 1, 1};
  const std::pair<std::vector<std::string>, std::vector<std::string>> pairs[] = {
      {{"a", "c", "b"}, {"a", "b", "c"}},
      {{"a", "b"}, {"a", "b", "c", "d"}},
      {{"b", "a"}, {"a", "b", "c"}}};
  const double gold[] = {0.6, 0.7, 0.1};
  Corpus c;
  double sq = 0.0;
  for (int i = 0; i < 3; ++i) {
    SegmentRecord r;
    r.seg_id = std::to_string(i);
    r.system_id = "A";
    r.hypothesis = testing::Join(pairs[i].first);
    r.reference = testing::Join(pairs[i].second);
    r.gold["g"] = gold[i];
    c.records.push_back(r);
    const double d = oracle::NaiveHlepor(pairs[i].first, pairs[i].second, q).score - gold[i];
    sq += d * d;
  }
  EXPECT_NEAR(Objective(c, "g", kUnitScale, unit), std::sqrt(sq / 3.0), 1e-12);
}

TEST(ObjectiveTest, Errors) {
  Corpus c = testing::SyntheticCorpus(52, 5, 1);
  EXPECT_THROW(Objective(c, "missing", kUnitScale, HLeporParams{}), DataError);
  EXPECT_THROW(Objective(Corpus{}, "g", kUnitScale, HLeporParams{}), DataError);
  EXPECT_THROW(CorpusObjective(c, "missing", kUnitScale, IntRange{}), DataError);
  EXPECT_THROW(CorpusObjective(Corpus{}, "g", kUnitScale, IntRange{}), DataError);
}

TEST(ObjectiveTest, CachedObjectiveIsBitwiseEqual) {
  Corpus c = testing::SyntheticCorpus(53, 150, 4);
  testing::AttachMetricGold(c, LookupPreset("en-de:lm").params, "g");
  for (int i = 0; i < 20; i += 3) c.records[i].gold.erase("g");
  const CorpusObjective cached(c, "g", kUnitScale, IntRange{1, 4});
  EXPECT_EQ(cached.excluded(), 7u);
  EXPECT_EQ(cached.segments(), 143u);
  std::mt19937_64 gen(54);
  for (int i = 0; i < 40; ++i) {
    const HLeporParams p = testing::RandomParams(gen);  // n up to 6
    ASSERT_EQ(cached(p), Objective(c, "g", kUnitScale, p)) << ToString(p);
  }
}

TEST(SplitTest, DeterministicAndGroupedBySegment) {
  Corpus c = testing::SyntheticCorpus(55, 1000, 1);
  // Give every segment a second system.
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    SegmentRecord copy = c.records[i];
    copy.system_id = "other";
    c.records.push_back(copy);
  }
  const CorpusSplit a = SplitBySegmentHash(c);
  const CorpusSplit b = SplitBySegmentHash(c);
  EXPECT_EQ(a.train, b.train);
  EXPECT_EQ(a.heldout, b.heldout);
  EXPECT_EQ(a.train.size() + a.heldout.size(), c.size());
  std::map<std::string, int> side;
  for (const auto& r : a.train.records) side[r.seg_id] |= 1;
  for (const auto& r : a.heldout.records) side[r.seg_id] |= 2;
  for (const auto& [seg, s] : side) ASSERT_NE(s, 3) << seg;
  const double fraction = static_cast<double>(a.heldout.size()) / c.size();
  EXPECT_NEAR(fraction, 0.2, 0.04);
  EXPECT_TRUE(SplitBySegmentHash(c, 0.0).heldout.empty());
  EXPECT_TRUE(SplitBySegmentHash(c, 1.0).train.empty());
  EXPECT_THROW(SplitBySegmentHash(c, 1.5), UsageError);
}

class ExportTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() / "cushlepor_export_test";
    std::filesystem::remove_all(dir_);
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::filesystem::path dir_;
};

TEST_F(ExportTest, RoundTrip) {
  std::mt19937_64 gen(56);
  const Trial t{3, testing::RandomParamsIn(gen, SearchSpace{}), 0.123, {}};
  ExportParams(t, {42, 300, "psqm", std::string(64, 'f')}, dir_ / "best.preset");
  const PresetFile back = LoadPresetFile(dir_ / "best.preset");
  EXPECT_EQ(back.params, t.params);
  EXPECT_EQ(back.objective, 0.123);
  EXPECT_EQ(back.seed, 42u);
  EXPECT_EQ(back.budget, 300);
  EXPECT_EQ(back.gold_column, "psqm");
}

TEST_F(ExportTest, PublishedValuesAppearVerbatim) {
  const Trial t{0, LookupPreset("en-de:cushlepor_lm").params, 0.0, {}};
  ExportParams(t, {}, dir_ / "lm.preset");
  std::ifstream in(dir_ / "lm.preset");
  std::stringstream text;
  text << in.rdbuf();
  for (const char* line : {"alpha = 2.95\n", "beta = 2.68\n", "n = 2\n",
                           "weight_elp = 1\n", "weight_pos = 11.79\n",
                           "weight_pr = 1.87\n"}) {
    EXPECT_NE(text.str().find(line), std::string::npos) << line;
  }
}

TEST_F(ExportTest, MissingDirectoryNamesPath) {
  const Trial t{0, HLeporParams{}, 0.0, {}};
  try {
    ExportParams(t, {}, dir_ / "absent" / "best.preset");
    FAIL();
  } catch (const IoError& e) {
    EXPECT_NE(std::string(e.what()).find("absent/best.preset"), std::string::npos);
  }
}

}  // namespace
}  // namespace cushlepor
