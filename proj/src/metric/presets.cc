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

#include <array>
#include <fstream>
#include <sstream>

#include "cushlepor/errors.h"
#include "cushlepor/kv_file.h"

namespace cushlepor {
namespace {

constexpr std::string_view kManual = "wmt13-manual-tuning";
constexpr std::string_view kSubmissionLm = "wmt21-submission-labse";
constexpr std::string_view kSubmissionPsqm = "wmt21-submission-psqm";

constexpr HLeporParams kEnCsRu{9.0, 1.0, 2, 2.0, 1.0, 7.0};
constexpr HLeporParams kEnDe{9.0, 1.0, 2, 3.0, 7.0, 1.0};
constexpr HLeporParams kCsEsRuEn{1.0, 9.0, 2, 2.0, 1.0, 7.0};
constexpr HLeporParams kDeFrEnEsFr{9.0, 1.0, 2, 2.0, 1.0, 3.0};

constexpr std::array<Preset, 14> kPresets = {{
    {"en-cs", PresetFlavor::kDefault, kEnCsRu, kManual},
    {"en-ru", PresetFlavor::kDefault, kEnCsRu, kManual},
    {"en-de", PresetFlavor::kDefault, kEnDe, kManual},
    {"cs-en", PresetFlavor::kDefault, kCsEsRuEn, kManual},
    {"es-en", PresetFlavor::kDefault, kCsEsRuEn, kManual},
    {"ru-en", PresetFlavor::kDefault, kCsEsRuEn, kManual},
    {"de-en", PresetFlavor::kDefault, kDeFrEnEsFr, kManual},
    {"fr-en", PresetFlavor::kDefault, kDeFrEnEsFr, kManual},
    {"en-es", PresetFlavor::kDefault, kDeFrEnEsFr, kManual},
    {"en-fr", PresetFlavor::kDefault, kDeFrEnEsFr, kManual},
    {"zh-en", PresetFlavor::kCushleporLm,
     {2.85, 4.73, 1, 1.01, 11.13, 4.62}, kSubmissionLm},
    {"zh-en", PresetFlavor::kCushleporPsqm,
     {9.09, 3.55, 3, 1.01, 14.98, 1.57}, kSubmissionPsqm},
    {"en-de", PresetFlavor::kCushleporLm,
     {2.95, 2.68, 2, 1.0, 11.79, 1.87}, kSubmissionLm},
    {"en-de", PresetFlavor::kCushleporPsqm,
     {1.13, 1.71, 2, 1.06, 11.90, 1.01}, kSubmissionPsqm},
}};

std::string CanonicalPair(std::string_view pair) {
  std::string out;
  for (std::size_t i = 0; i < pair.size(); ++i) {
    const char c = pair[i];
    if (c == '=' && i + 1 < pair.size() && pair[i + 1] == '>') {
      out.push_back('-');
      ++i;
    } else if (c == '_') {
      out.push_back('-');
    } else if (c >= 'A' && c <= 'Z') {
      out.push_back(static_cast<char>(c - 'A' + 'a'));
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::string AvailableList() {
  std::string out;
  for (const Preset& p : kPresets) {
    if (!out.empty()) out += ", ";
    out += PresetName(p);
  }
  return out;
}

}  // namespace

std::string_view FlavorName(PresetFlavor flavor) {
  switch (flavor) {
    case PresetFlavor::kDefault:
      return "default";
    case PresetFlavor::kCushleporLm:
      return "cushlepor_lm";
    case PresetFlavor::kCushleporPsqm:
      return "cushlepor_psqm";
  }
  return "unknown";
}

PresetFlavor ParseFlavor(std::string_view name) {
  if (name == "default") return PresetFlavor::kDefault;
  if (name == "cushlepor_lm" || name == "lm") return PresetFlavor::kCushleporLm;
  if (name == "cushlepor_psqm" || name == "psqm") {
    return PresetFlavor::kCushleporPsqm;
  }
  throw LookupError("unknown preset flavor '" + std::string(name) +
                    "'; expected default, cushlepor_lm or cushlepor_psqm");
}

std::span<const Preset> BuiltinPresets() { return kPresets; }

const Preset& LookupPreset(std::string_view pair, PresetFlavor flavor) {
  const std::string wanted = CanonicalPair(pair);
  for (const Preset& p : kPresets) {
    if (p.pair == wanted && p.flavor == flavor) return p;
  }
  throw LookupError("unknown preset '" + std::string(pair) + ":" +
                    std::string(FlavorName(flavor)) +
                    "'; available: " + AvailableList());
}

const Preset& LookupPreset(std::string_view name) {
  const auto colon = name.find(':');
  if (colon == std::string_view::npos) {
    return LookupPreset(name, PresetFlavor::kDefault);
  }
  PresetFlavor flavor;
  try {
    flavor = ParseFlavor(name.substr(colon + 1));
  } catch (const LookupError&) {
    throw LookupError("unknown preset '" + std::string(name) +
                      "'; available: " + AvailableList());
  }
  return LookupPreset(name.substr(0, colon), flavor);
}

std::string PresetName(const Preset& preset) {
  return std::string(preset.pair) + ":" + std::string(FlavorName(preset.flavor));
}

std::string FormatPresetFile(const PresetFile& file) {
  std::ostringstream out;
  out << "# hLEPOR parameter preset\n";
  out << "alpha = " << FormatReal(file.params.alpha) << "\n";
  out << "beta = " << FormatReal(file.params.beta) << "\n";
  out << "n = " << file.params.n << "\n";
  out << "weight_elp = " << FormatReal(file.params.weight_elp) << "\n";
  out << "weight_pos = " << FormatReal(file.params.weight_pos) << "\n";
  out << "weight_pr = " << FormatReal(file.params.weight_pr) << "\n";
  if (file.objective) out << "objective = " << FormatReal(*file.objective) << "\n";
  if (file.seed) out << "seed = " << *file.seed << "\n";
  if (file.budget) out << "budget = " << *file.budget << "\n";
  if (file.gold_column) out << "gold_column = " << *file.gold_column << "\n";
  if (file.corpus_sha256) out << "corpus_sha256 = " << *file.corpus_sha256 << "\n";
  return out.str();
}

PresetFile ParsePresetFile(std::string_view text, std::string_view origin) {
  const KeyValueMap kv = ParseKeyValues(text, origin);
  const std::string prefix = std::string(origin) + ": ";
  auto required = [&](std::string_view key) -> const std::string& {
    const auto it = kv.find(key);
    if (it == kv.end()) {
      throw DataError(prefix + "missing key '" + std::string(key) + "'");
    }
    return it->second;
  };

  PresetFile file;
  file.params.alpha = ParseReal(required("alpha"), prefix + "alpha");
  file.params.beta = ParseReal(required("beta"), prefix + "beta");
  file.params.n = static_cast<int>(ParseInteger(required("n"), prefix + "n"));
  file.params.weight_elp =
      ParseReal(required("weight_elp"), prefix + "weight_elp");
  file.params.weight_pos =
      ParseReal(required("weight_pos"), prefix + "weight_pos");
  file.params.weight_pr = ParseReal(required("weight_pr"), prefix + "weight_pr");

  for (const auto& [key, value] : kv) {
    if (key == "alpha" || key == "beta" || key == "n" || key == "weight_elp" ||
        key == "weight_pos" || key == "weight_pr") {
      continue;
    } else if (key == "objective") {
      file.objective = ParseReal(value, prefix + key);
    } else if (key == "seed") {
      file.seed = ParseUnsigned(value, prefix + key);
    } else if (key == "budget") {
      file.budget = ParseInteger(value, prefix + key);
    } else if (key == "gold_column") {
      file.gold_column = value;
    } else if (key == "corpus_sha256") {
      file.corpus_sha256 = value;
    } else {
      throw DataError(prefix + "unknown key '" + key + "'");
    }
  }
  try {
    ValidateParams(file.params);
  } catch (const UsageError& e) {
    throw DataError(prefix + e.what());
  }
  return file;
}

void WritePresetFile(const PresetFile& file, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write preset file '" + path.string() + "'");
  out << FormatPresetFile(file);
  if (!out.flush()) {
    throw IoError("cannot write preset file '" + path.string() + "'");
  }
}

PresetFile LoadPresetFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read preset file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParsePresetFile(buffer.str(), path.string());
}

}  // namespace cushlepor
