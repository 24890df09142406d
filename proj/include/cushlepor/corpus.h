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

#ifndef CUSHLEPOR_CORPUS_H_
#define CUSHLEPOR_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cushlepor/tokenizer.h"

namespace cushlepor {

struct SegmentRecord {
  std::string seg_id;
  std::string system_id;
  std::optional<std::string> source;
  std::string hypothesis;
  std::string reference;
  std::map<std::string, double, std::less<>> gold;

  bool operator==(const SegmentRecord&) const = default;
};

// Records in file order; (seg_id, system_id) is unique.
struct Corpus {
  std::vector<SegmentRecord> records;

  std::size_t size() const { return records.size(); }
  bool empty() const { return records.empty(); }
  // Sorted union of the gold column names over all records.
  std::vector<std::string> GoldColumns() const;

  bool operator==(const Corpus&) const = default;
};

enum class CorpusFormat { kTsv, kJsonl };

CorpusFormat ParseCorpusFormat(std::string_view name);
// Guesses from the extension (".jsonl"/".json" -> JSONL, otherwise TSV).
CorpusFormat CorpusFormatFromPath(const std::filesystem::path& path);

// Canonical field name -> column/key name in the input file. Fields not
// listed keep their canonical name.
struct ColumnMap {
  std::map<std::string, std::string, std::less<>> mapping;

  std::string SourceName(std::string_view canonical) const;
};

// "hypothesis=target,reference=ref". Throws UsageError for unknown canonical
// names or malformed entries.
ColumnMap ParseColumnMap(std::string_view spec);

struct IngestOptions {
  CorpusFormat format = CorpusFormat::kTsv;
  ColumnMap columns;
  // Strict ingestion fails on the first bad file; lenient ingestion skips
  // bad rows (or drops bad gold values) and reports warnings.
  bool strict = true;
  TokenizeMode tokenize = TokenizeMode::kStandard;
  // When non-empty, only these extra columns are read as gold scores and any
  // other extra column is ignored. When empty, every extra column is gold.
  std::vector<std::string> gold_columns;
};

struct IngestIssue {
  std::size_t line = 0;  // 1-based line in the input, header is line 1 for TSV
  std::string message;
};

struct IngestResult {
  Corpus corpus;
  std::vector<IngestIssue> warnings;
};

// Throws DataError for missing columns and, in strict mode, for any invalid
// row (the message lists every failing line).
IngestResult IngestText(std::string_view text, const IngestOptions& options,
                        std::string_view origin = "<input>");
IngestResult Ingest(const std::filesystem::path& path,
                    const IngestOptions& options);

// Canonical serialization (canonical column names, sorted gold columns, reals
// in shortest round-trip form). Throws DataError for TSV fields containing
// tabs or newlines.
std::string SerializeCorpus(const Corpus& corpus, CorpusFormat format);
void WriteCorpus(const Corpus& corpus, const std::filesystem::path& path,
                 CorpusFormat format);

// Lowercase hex SHA-256 of the canonical JSONL serialization.
std::string CorpusSha256(const Corpus& corpus);

}  // namespace cushlepor

#endif  // CUSHLEPOR_CORPUS_H_
