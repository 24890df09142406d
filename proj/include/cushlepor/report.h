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

#ifndef CUSHLEPOR_REPORT_H_
#define CUSHLEPOR_REPORT_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "cushlepor/params.h"
#include "cushlepor/scoring.h"

namespace cushlepor {

inline constexpr std::string_view kVersion = "0.1.0";

// Provenance embedded in every report.
struct ReportMeta {
  HLeporParams params;
  std::string params_source;  // preset name, file path or "inline"
  std::optional<std::uint64_t> seed;
  std::string input;
  std::string version = std::string(kVersion);
};

enum class ReportFormat { kJson, kCsv };

ReportFormat ParseReportFormat(std::string_view name);

// Single JSON document with sections segments, systems, agreement,
// histograms and meta. The agreement section is omitted when `scores`
// carries no agreement entries.
std::string RenderJsonReport(const CorpusScores& scores, const ReportMeta& meta);

// JSON: writes `out` as one file. CSV: `out` is a directory receiving
// segments.csv, systems.csv, agreement.csv (when present), histograms.csv
// and meta.csv. Throws IoError naming the path on failure; parent
// directories must exist.
void WriteReport(const CorpusScores& scores, const ReportMeta& meta,
                 const std::filesystem::path& out, ReportFormat format);

}  // namespace cushlepor

#endif  // CUSHLEPOR_REPORT_H_
