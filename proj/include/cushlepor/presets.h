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

#ifndef CUSHLEPOR_PRESETS_H_
#define CUSHLEPOR_PRESETS_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "cushlepor/params.h"

namespace cushlepor {

enum class PresetFlavor {
  kDefault,        // hand-tuned WMT13 parameters
  kCushleporLm,    // tuned against LaBSE similarity
  kCushleporPsqm,  // tuned against professional SQM ratings
};

std::string_view FlavorName(PresetFlavor flavor);
// Accepts "default", "cushlepor_lm", "cushlepor_psqm" ("lm"/"psqm" too).
PresetFlavor ParseFlavor(std::string_view name);

struct Preset {
  std::string_view pair;  // "en-de"
  PresetFlavor flavor;
  HLeporParams params;
  std::string_view provenance;
};

// Immutable registry, in listing order.
std::span<const Preset> BuiltinPresets();

// Throws LookupError listing every available preset when the pair/flavor
// combination is unknown. Pair matching is case-insensitive and accepts
// "en-de", "en_de" and "en=>de".
const Preset& LookupPreset(std::string_view pair, PresetFlavor flavor);

// "en-de:cushlepor_lm"; a bare pair means the default flavor.
const Preset& LookupPreset(std::string_view name);

std::string PresetName(const Preset& preset);

// Contents of a preset file: the six parameters plus optional provenance
// written by the tuner.
struct PresetFile {
  HLeporParams params;
  std::optional<double> objective;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> budget;
  std::optional<std::string> gold_column;
  std::optional<std::string> corpus_sha256;

  bool operator==(const PresetFile&) const = default;
};

std::string FormatPresetFile(const PresetFile& file);
PresetFile ParsePresetFile(std::string_view text, std::string_view origin);

// Throws IoError naming the path when it cannot be written; the parent
// directory must already exist.
void WritePresetFile(const PresetFile& file, const std::filesystem::path& path);
PresetFile LoadPresetFile(const std::filesystem::path& path);

}  // namespace cushlepor

#endif  // CUSHLEPOR_PRESETS_H_
