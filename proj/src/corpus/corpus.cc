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

#include "cushlepor/corpus.h"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "cushlepor/errors.h"
#include "cushlepor/kv_file.h"
#include "json.hpp"

namespace cushlepor {
namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 5> kCanonicalFields = {
    "seg_id", "system_id", "source", "hypothesis", "reference"};

bool IsCanonical(std::string_view name) {
  return std::find(kCanonicalFields.begin(), kCanonicalFields.end(), name) !=
         kCanonicalFields.end();
}

struct GoldCell {
  enum class Kind { kNull, kNumber, kText } kind = Kind::kNull;
  double number = 0.0;
  std::string text;
};

// One input row before validation.
struct RawRow {
  std::size_t line = 0;
  std::string seg_id;
  std::string system_id;
  std::optional<std::string> source;
  std::string hypothesis;
  std::string reference;
  std::vector<std::pair<std::string, GoldCell>> gold;
};

GoldCell CellFromText(std::string_view text) {
  GoldCell cell;
  const std::string_view trimmed = Trim(text);
  if (trimmed.empty()) return cell;
  try {
    cell.number = ParseReal(trimmed, "gold");
    cell.kind = GoldCell::Kind::kNumber;
  } catch (const DataError&) {
    cell.kind = GoldCell::Kind::kText;
    cell.text = std::string(trimmed);
  }
  return cell;
}

bool WantGold(const IngestOptions& options, std::string_view column) {
  if (options.gold_columns.empty()) return true;
  return std::find(options.gold_columns.begin(), options.gold_columns.end(),
                   column) != options.gold_columns.end();
}

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    const auto tab = line.find('\t', pos);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(pos));
      break;
    }
    fields.push_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
  return fields;
}

std::vector<std::pair<std::size_t, std::string_view>> SplitLines(
    std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.emplace_back(++line_no, line);
    pos = eol + 1;
  }
  return lines;
}

// Row-level problems that do not abort the whole file.
struct RowError {
  std::size_t line;
  std::string message;
};

std::vector<RawRow> ParseTsv(std::string_view text, const IngestOptions& options,
                             std::string_view origin,
                             std::vector<RowError>& errors) {
  auto lines = SplitLines(text);
  if (lines.empty()) throw DataError(std::string(origin) + ": missing header row");
  std::string_view header_line = lines.front().second;
  // Tolerate a UTF-8 byte order mark.
  if (header_line.starts_with("\xEF\xBB\xBF")) header_line.remove_prefix(3);
  const auto header = SplitTabs(header_line);

  std::map<std::string, std::size_t, std::less<>> index;
  for (std::size_t i = 0; i < header.size(); ++i) {
    index.emplace(std::string(Trim(header[i])), i);
  }
  auto column_of = [&](std::string_view canonical,
                       bool required) -> std::optional<std::size_t> {
    const std::string name = options.columns.SourceName(canonical);
    const auto it = index.find(name);
    if (it == index.end()) {
      if (required) {
        throw DataError(std::string(origin) + ": missing column '" + name +
                        "' (for " + std::string(canonical) + ")");
      }
      return std::nullopt;
    }
    return it->second;
  };
  const std::size_t seg_col = *column_of("seg_id", true);
  const std::size_t sys_col = *column_of("system_id", true);
  const std::size_t hyp_col = *column_of("hypothesis", true);
  const std::size_t ref_col = *column_of("reference", true);
  const auto src_col = column_of("source", false);

  std::set<std::size_t> mapped = {seg_col, sys_col, hyp_col, ref_col};
  if (src_col) mapped.insert(*src_col);
  std::vector<std::pair<std::string, std::size_t>> gold_cols;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (mapped.count(i) != 0) continue;
    const std::string name(Trim(header[i]));
    if (WantGold(options, name)) gold_cols.emplace_back(name, i);
  }

  std::vector<RawRow> rows;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& [line_no, line] = lines[k];
    if (Trim(line).empty()) continue;
    const auto fields = SplitTabs(line);
    if (fields.size() != header.size()) {
      errors.push_back({line_no, "expected " + std::to_string(header.size()) +
                                     " fields, found " +
                                     std::to_string(fields.size())});
      continue;
    }
    RawRow row;
    row.line = line_no;
    row.seg_id = std::string(fields[seg_col]);
    row.system_id = std::string(fields[sys_col]);
    row.hypothesis = std::string(fields[hyp_col]);
    row.reference = std::string(fields[ref_col]);
    if (src_col && !fields[*src_col].empty()) {
      row.source = std::string(fields[*src_col]);
    }
    for (const auto& [name, col] : gold_cols) {
      row.gold.emplace_back(name, CellFromText(fields[col]));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::optional<std::string> JsonString(const json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer() || value.is_number_unsigned()) {
    return value.dump();
  }
  return std::nullopt;
}

std::vector<RawRow> ParseJsonl(std::string_view text,
                               const IngestOptions& options,
                               std::string_view origin,
                               std::vector<RowError>& errors) {
  const std::string seg_key = options.columns.SourceName("seg_id");
  const std::string sys_key = options.columns.SourceName("system_id");
  const std::string hyp_key = options.columns.SourceName("hypothesis");
  const std::string ref_key = options.columns.SourceName("reference");
  const std::string src_key = options.columns.SourceName("source");

  std::vector<RawRow> rows;
  for (const auto& [line_no, line] : SplitLines(text)) {
    if (Trim(line).empty()) continue;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::parse_error& e) {
      errors.push_back({line_no, std::string("invalid JSON: ") + e.what()});
      continue;
    }
    if (!record.is_object()) {
      errors.push_back({line_no, "expected a JSON object"});
      continue;
    }
    RawRow row;
    row.line = line_no;
    bool ok = true;
    auto take = [&](const std::string& key, std::string_view canonical,
                    std::string& out) {
      const auto it = record.find(key);
      if (it == record.end()) {
        // A field absent from a record is a missing column for that row.
        throw DataError(std::string(origin) + ":" + std::to_string(line_no) +
                        ": missing column '" + key + "' (for " +
                        std::string(canonical) + ")");
      }
      auto value = JsonString(*it);
      if (!value) {
        errors.push_back({line_no, "field '" + key + "' must be a string"});
        ok = false;
        return;
      }
      out = std::move(*value);
    };
    take(seg_key, "seg_id", row.seg_id);
    take(sys_key, "system_id", row.system_id);
    take(hyp_key, "hypothesis", row.hypothesis);
    take(ref_key, "reference", row.reference);
    if (!ok) continue;
    if (const auto it = record.find(src_key);
        it != record.end() && it->is_string() &&
        !it->get<std::string>().empty()) {
      row.source = it->get<std::string>();
    }
    for (const auto& [key, value] : record.items()) {
      if (key == seg_key || key == sys_key || key == hyp_key ||
          key == ref_key || key == src_key || !WantGold(options, key)) {
        continue;
      }
      GoldCell cell;
      if (value.is_number()) {
        cell.kind = GoldCell::Kind::kNumber;
        cell.number = value.get<double>();
      } else if (value.is_string()) {
        cell = CellFromText(value.get<std::string>());
      } else if (!value.is_null()) {
        cell.kind = GoldCell::Kind::kText;
        cell.text = value.dump();
      }
      row.gold.emplace_back(key, std::move(cell));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string JoinIssues(std::string_view origin,
                       const std::vector<RowError>& errors) {
  constexpr std::size_t kMaxListed = 10;
  std::string out = std::string(origin) + ": " + std::to_string(errors.size()) +
                    " invalid row(s): ";
  for (std::size_t i = 0; i < errors.size() && i < kMaxListed; ++i) {
    if (i > 0) out += "; ";
    out += "line " + std::to_string(errors[i].line) + ": " + errors[i].message;
  }
  if (errors.size() > kMaxListed) out += "; ...";
  return out;
}

IngestResult Validate(std::vector<RawRow> rows, std::vector<RowError> errors,
                      const IngestOptions& options, std::string_view origin) {
  IngestResult result;
  std::set<std::pair<std::string, std::string>> seen;
  for (RawRow& row : rows) {
    if (row.seg_id.empty()) {
      errors.push_back({row.line, "empty seg_id"});
      continue;
    }
    if (Tokenize(row.hypothesis, options.tokenize).empty()) {
      errors.push_back({row.line, "empty hypothesis (segment " + row.seg_id +
                                      ", system " + row.system_id + ")"});
      continue;
    }
    if (Tokenize(row.reference, options.tokenize).empty()) {
      errors.push_back({row.line, "empty reference (segment " + row.seg_id +
                                      ", system " + row.system_id + ")"});
      continue;
    }
    if (!seen.emplace(row.seg_id, row.system_id).second) {
      errors.push_back({row.line, "duplicate (seg_id, system_id) = (" +
                                      row.seg_id + ", " + row.system_id + ")"});
      continue;
    }
    SegmentRecord record;
    record.seg_id = std::move(row.seg_id);
    record.system_id = std::move(row.system_id);
    record.source = std::move(row.source);
    record.hypothesis = std::move(row.hypothesis);
    record.reference = std::move(row.reference);
    for (auto& [name, cell] : row.gold) {
      switch (cell.kind) {
        case GoldCell::Kind::kNull:
          break;
        case GoldCell::Kind::kNumber:
          record.gold.emplace(name, cell.number);
          break;
        case GoldCell::Kind::kText:
          if (options.strict) {
            errors.push_back({row.line, "non-numeric gold value '" + cell.text +
                                            "' in column '" + name + "'"});
          } else {
            result.warnings.push_back(
                {row.line, "non-numeric gold value '" + cell.text +
                               "' in column '" + name + "' treated as absent"});
          }
          break;
      }
    }
    result.corpus.records.push_back(std::move(record));
  }

  if (options.strict && !errors.empty()) {
    std::sort(errors.begin(), errors.end(),
              [](const RowError& a, const RowError& b) { return a.line < b.line; });
    throw DataError(JoinIssues(origin, errors));
  }
  for (RowError& e : errors) {
    result.warnings.push_back({e.line, "row skipped: " + e.message});
  }
  std::stable_sort(
      result.warnings.begin(), result.warnings.end(),
      [](const IngestIssue& a, const IngestIssue& b) { return a.line < b.line; });
  return result;
}

void RequireTsvSafe(const std::string& field, std::string_view what) {
  if (field.find_first_of("\t\n\r") != std::string::npos) {
    throw DataError("cannot write " + std::string(what) +
                    " containing a tab or newline as TSV");
  }
}

}  // namespace

std::vector<std::string> Corpus::GoldColumns() const {
  std::set<std::string> names;
  for (const SegmentRecord& r : records) {
    for (const auto& [name, value] : r.gold) names.insert(name);
  }
  return {names.begin(), names.end()};
}

CorpusFormat ParseCorpusFormat(std::string_view name) {
  if (name == "tsv") return CorpusFormat::kTsv;
  if (name == "jsonl") return CorpusFormat::kJsonl;
  throw UsageError("unknown input format '" + std::string(name) +
                   "'; expected tsv or jsonl");
}

CorpusFormat CorpusFormatFromPath(const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  return ext == ".jsonl" || ext == ".json" ? CorpusFormat::kJsonl
                                           : CorpusFormat::kTsv;
}

std::string ColumnMap::SourceName(std::string_view canonical) const {
  const auto it = mapping.find(canonical);
  return it == mapping.end() ? std::string(canonical) : it->second;
}

ColumnMap ParseColumnMap(std::string_view spec) {
  ColumnMap map;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    auto comma = spec.find(',', pos);
    if (comma == std::string_view::npos) comma = spec.size();
    const std::string_view entry = Trim(spec.substr(pos, comma - pos));
    pos = comma + 1;
    if (entry.empty()) continue;
    const auto eq = entry.find('=');
    if (eq == std::string_view::npos) {
      throw UsageError("column map entry '" + std::string(entry) +
                       "' is not of the form field=column");
    }
    const std::string field(Trim(entry.substr(0, eq)));
    const std::string column(Trim(entry.substr(eq + 1)));
    if (!IsCanonical(field)) {
      throw UsageError("column map: unknown field '" + field +
                       "'; expected seg_id, system_id, source, hypothesis or "
                       "reference");
    }
    if (column.empty()) {
      throw UsageError("column map: empty column name for '" + field + "'");
    }
    map.mapping[field] = column;
  }
  return map;
}

IngestResult IngestText(std::string_view text, const IngestOptions& options,
                        std::string_view origin) {
  std::vector<RowError> errors;
  std::vector<RawRow> rows = options.format == CorpusFormat::kTsv
                                 ? ParseTsv(text, options, origin, errors)
                                 : ParseJsonl(text, options, origin, errors);
  return Validate(std::move(rows), std::move(errors), options, origin);
}

IngestResult Ingest(const std::filesystem::path& path,
                    const IngestOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read input '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return IngestText(buffer.str(), options, path.string());
}

std::string SerializeCorpus(const Corpus& corpus, CorpusFormat format) {
  std::ostringstream out;
  const std::vector<std::string> gold = corpus.GoldColumns();
  if (format == CorpusFormat::kJsonl) {
    for (const SegmentRecord& r : corpus.records) {
      json record = json::object();
      record["seg_id"] = r.seg_id;
      record["system_id"] = r.system_id;
      if (r.source) record["source"] = *r.source;
      record["hypothesis"] = r.hypothesis;
      record["reference"] = r.reference;
      for (const auto& [name, value] : r.gold) record[name] = value;
      out << record.dump() << "\n";
    }
    return out.str();
  }

  const bool any_source =
      std::any_of(corpus.records.begin(), corpus.records.end(),
                  [](const SegmentRecord& r) { return r.source.has_value(); });
  out << "seg_id\tsystem_id";
  if (any_source) out << "\tsource";
  out << "\thypothesis\treference";
  for (const std::string& name : gold) {
    RequireTsvSafe(name, "gold column name");
    out << "\t" << name;
  }
  out << "\n";
  for (const SegmentRecord& r : corpus.records) {
    RequireTsvSafe(r.seg_id, "seg_id");
    RequireTsvSafe(r.system_id, "system_id");
    RequireTsvSafe(r.hypothesis, "hypothesis");
    RequireTsvSafe(r.reference, "reference");
    out << r.seg_id << "\t" << r.system_id;
    if (any_source) {
      const std::string src = r.source.value_or("");
      RequireTsvSafe(src, "source");
      out << "\t" << src;
    }
    out << "\t" << r.hypothesis << "\t" << r.reference;
    for (const std::string& name : gold) {
      out << "\t";
      if (const auto it = r.gold.find(name); it != r.gold.end()) {
        out << FormatReal(it->second);
      }
    }
    out << "\n";
  }
  return out.str();
}

void WriteCorpus(const Corpus& corpus, const std::filesystem::path& path,
                 CorpusFormat format) {
  const std::string text = SerializeCorpus(corpus, format);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text) || !out.flush()) {
    throw IoError("cannot write corpus '" + path.string() + "'");
  }
}

std::string CorpusSha256(const Corpus& corpus) {
  const std::string text = SerializeCorpus(corpus, CorpusFormat::kJsonl);
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(text.data(), text.size(), digest.data(), &length,
                 EVP_sha256(), nullptr) != 1) {
    throw IoError("SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    hex.push_back(kHex[digest[i] >> 4]);
    hex.push_back(kHex[digest[i] & 0x0F]);
  }
  return hex;
}

}  // namespace cushlepor
