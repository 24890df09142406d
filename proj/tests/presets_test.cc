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

#include "cushlepor/presets.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <set>
#include <string>

#include "cushlepor/errors.h"
#include "cushlepor/kv_file.h"
#include "testing/generators.h"
#include "testing/published_presets.h"

namespace cushlepor {
namespace {

TEST(PresetRegistryTest, MatchesPublishedBlocks) {
  ASSERT_EQ(BuiltinPresets().size(), testing::kPublishedBlocks.size());
  for (const auto& block : testing::kPublishedBlocks) {
    SCOPED_TRACE(std::string(block.pair) + ":" + block.flavor);
    const Preset& p = LookupPreset(block.pair, ParseFlavor(block.flavor));
    EXPECT_EQ(p.params.alpha, block.alpha);
    EXPECT_EQ(p.params.beta, block.beta);
    EXPECT_EQ(p.params.n, block.n);
    EXPECT_EQ(p.params.weight_elp, block.weight_elp);
    EXPECT_EQ(p.params.weight_pos, block.weight_pos);
    EXPECT_EQ(p.params.weight_pr, block.weight_pr);
  }
}

TEST(PresetRegistryTest, NamesAreUniqueAndValid) {
  std::set<std::string> names;
  for (const Preset& p : BuiltinPresets()) {
    EXPECT_TRUE(names.insert(PresetName(p)).second) << PresetName(p);
    EXPECT_NO_THROW(ValidateParams(p.params));
    EXPECT_FALSE(p.provenance.empty());
  }
}

TEST(PresetRegistryTest, DefaultEnDeMatchesParamsDefault) {
  EXPECT_EQ(LookupPreset("en-de").params, HLeporParams{});
}

TEST(PresetRegistryTest, PairSpellings) {
  const Preset& a = LookupPreset("EN=>DE", PresetFlavor::kCushleporLm);
  const Preset& b = LookupPreset("en_de:lm");
  const Preset& c = LookupPreset("en-de:cushlepor_lm");
  EXPECT_EQ(&a, &b);
  EXPECT_EQ(&a, &c);
}

TEST(PresetRegistryTest, UnknownPresetListsAvailable) {
  try {
    LookupPreset("xx-yy");
    FAIL() << "expected LookupError";
  } catch (const LookupError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("xx-yy"), std::string::npos);
    for (const Preset& p : BuiltinPresets()) {
      EXPECT_NE(msg.find(PresetName(p)), std::string::npos) << PresetName(p);
    }
  }
  EXPECT_THROW(LookupPreset("en-cs:cushlepor_lm"), LookupError);
  EXPECT_THROW(LookupPreset("en-de:fancy"), LookupError);
}

TEST(KeyValueTest, ParsesCommentsAndWhitespace) {
  const KeyValueMap kv =
      ParseKeyValues("# comment\n\n  alpha =  2.5 \nname=a b c\r\n", "x");
  ASSERT_EQ(kv.size(), 2u);
  EXPECT_EQ(kv.at("alpha"), "2.5");
  EXPECT_EQ(kv.at("name"), "a b c");
}

TEST(KeyValueTest, RejectsMalformedAndDuplicates) {
  EXPECT_THROW(ParseKeyValues("alpha 2\n", "x"), DataError);
  EXPECT_THROW(ParseKeyValues("= 2\n", "x"), DataError);
  try {
    ParseKeyValues("a = 1\nb = 2\na = 3\n", "cfg.txt");
    FAIL();
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("cfg.txt:3"), std::string::npos)
        << e.what();
  }
}

TEST(KeyValueTest, NumberParsing) {
  EXPECT_EQ(ParseReal("1e-3", "v"), 1e-3);
  EXPECT_THROW(ParseReal("1.5x", "v"), DataError);
  EXPECT_THROW(ParseReal("nan", "v"), DataError);
  EXPECT_THROW(ParseReal("", "v"), DataError);
  EXPECT_EQ(ParseInteger("-4", "v"), -4);
  EXPECT_THROW(ParseInteger("4.0", "v"), DataError);
  EXPECT_THROW(ParseUnsigned("-1", "v"), DataError);
  EXPECT_EQ(ParseUnsigned("18446744073709551615", "v"), 18446744073709551615ULL);
}

TEST(KeyValueTest, FormatRealRoundTrips) {
  std::mt19937_64 gen(3);
  for (int i = 0; i < 10000; ++i) {
    const double v = std::ldexp(testing::UniformReal(gen, -1.0, 1.0),
                                testing::UniformInt(gen, -60, 60));
    ASSERT_EQ(ParseReal(FormatReal(v), "v"), v);
  }
  EXPECT_EQ(FormatReal(11.9), "11.9");
  EXPECT_EQ(FormatReal(2.0), "2");
}

TEST(PresetFileTest, RoundTripWithProvenance) {
  std::mt19937_64 gen(5);
  for (int i = 0; i < 200; ++i) {
    PresetFile file;
    file.params = testing::RandomParams(gen);
    if (i % 2 == 0) {
      file.objective = testing::UniformReal(gen, 0.0, 1.0);
      file.seed = gen();
      file.budget = 300;
      file.gold_column = "psqm";
      file.corpus_sha256 = std::string(64, 'a');
    }
    ASSERT_EQ(ParsePresetFile(FormatPresetFile(file), "mem"), file);
  }
}

TEST(PresetFileTest, RejectsUnknownKeysAndInvalidValues) {
  const std::string base =
      "alpha = 1\nbeta = 1\nn = 2\nweight_elp = 1\nweight_pos = 1\n"
      "weight_pr = 1\n";
  EXPECT_NO_THROW(ParsePresetFile(base, "p"));
  EXPECT_THROW(ParsePresetFile(base + "gamma = 3\n", "p"), DataError);
  EXPECT_THROW(ParsePresetFile("alpha = 1\n", "p"), DataError);
  std::string bad = base;
  bad.replace(bad.find("n = 2"), 5, "n = 0");
  EXPECT_THROW(ParsePresetFile(bad, "p"), DataError);
}

TEST(PresetFileTest, WriteAndLoad) {
  const auto dir = std::filesystem::temp_directory_path() / "cushlepor_presets_test";
  std::filesystem::create_directories(dir);
  PresetFile file;
  file.params = LookupPreset("zh-en:psqm").params;
  WritePresetFile(file, dir / "p.preset");
  EXPECT_EQ(LoadPresetFile(dir / "p.preset"), file);
  EXPECT_THROW(LoadPresetFile(dir / "missing.preset"), IoError);
  try {
    WritePresetFile(file, dir / "no" / "such" / "dir" / "p.preset");
    FAIL();
  } catch (const IoError& e) {
    EXPECT_NE(std::string(e.what()).find("no/such/dir"), std::string::npos);
  }
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace cushlepor
