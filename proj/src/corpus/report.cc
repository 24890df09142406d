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

#include "cushlepor/report.h"

#include <fstream>
#include <sstream>

#include "cushlepor/errors.h"
#include "cushlepor/kv_file.h"
#include "json.hpp"

namespace cushlepor {
namespace {

using nlohmann::ordered_json;

ordered_json ParamsJson(const HLeporParams& p) {
  ordered_json j;
  j["alpha"] = p.alpha;
  j["beta"] = p.beta;
  j["n"] = p.n;
  j["weight_elp"] = p.weight_elp;
  j["weight_pos"] = p.weight_pos;
  j["weight_pr"] = p.weight_pr;
  return j;
}

ordered_json HistogramJson(const Histogram& h) {
  ordered_json j = ordered_json::array();
  for (const std::size_t c : h) j.push_back(c);
  return j;
}

double BinEdge(std::size_t i) {
  return static_cast<double>(i) / static_cast<double>(kHistogramBins);
}

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text) || !out.flush()) {
    throw IoError("cannot write report '" + path.string() + "'");
  }
}

// RFC 4180 quoting when needed.
std::string CsvField(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string PearsonText(const Agreement& a) {
  return a.pearson ? FormatReal(*a.pearson) : std::string();
}

}  // namespace

ReportFormat ParseReportFormat(std::string_view name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  throw UsageError("unknown report format '" + std::string(name) +
                   "'; expected json or csv");
}

std::string RenderJsonReport(const CorpusScores& scores,
                             const ReportMeta& meta) {
  ordered_json doc;

  ordered_json segments = ordered_json::array();
  for (const SegmentScore& s : scores.segments) {
    const FactorBreakdown& f = s.factors;
    ordered_json row;
    row["seg_id"] = s.seg_id;
    row["system_id"] = s.system_id;
    row["score"] = f.score;
    row["lp"] = f.lp;
    row["npd"] = f.npd;
    row["npos_penal"] = f.npos_penal;
    row["precision"] = f.precision;
    row["recall"] = f.recall;
    row["hpr"] = f.hpr;
    row["aligned_num"] = f.aligned_num;
    row["len_hyp"] = f.len_hyp;
    row["len_ref"] = f.len_ref;
    segments.push_back(std::move(row));
  }
  doc["segments"] = std::move(segments);

  ordered_json systems = ordered_json::array();
  for (const SystemScore& s : scores.systems) {
    systems.push_back({{"system_id", s.system_id},
                       {"segments", s.segments},
                       {"mean", s.mean},
                       {"rank", s.rank}});
  }
  doc["systems"] = std::move(systems);

  if (!scores.agreement.empty()) {
    ordered_json agreement = ordered_json::array();
    for (const Agreement& a : scores.agreement) {
      ordered_json row;
      row["metric"] = a.metric;
      row["gold_column"] = a.column;
      row["scale"] = {{"name", a.scale.name},
                      {"min", a.scale.min},
                      {"max", a.scale.max},
                      {"inverted", a.scale.inverted}};
      row["segments"] = a.segments;
      row["clamped"] = a.clamped;
      row["rmse"] = a.rmse;
      row["pearson"] = a.pearson ? ordered_json(*a.pearson) : ordered_json();
      if (!a.pearson) row["pearson_note"] = a.pearson_note;
      agreement.push_back(std::move(row));
    }
    doc["agreement"] = std::move(agreement);
  }

  ordered_json histograms;
  histograms["bins"] = kHistogramBins;
  ordered_json edges = ordered_json::array();
  for (std::size_t i = 0; i <= kHistogramBins; ++i) edges.push_back(BinEdge(i));
  histograms["edges"] = std::move(edges);
  histograms["metric"] = HistogramJson(scores.histogram);
  ordered_json gold = ordered_json::object();
  for (const Agreement& a : scores.agreement) {
    if (a.metric == "hlepor") gold[a.column] = HistogramJson(a.gold_histogram);
  }
  histograms["gold"] = std::move(gold);
  doc["histograms"] = std::move(histograms);

  ordered_json m;
  m["params"] = ParamsJson(meta.params);
  m["params_source"] = meta.params_source;
  m["seed"] = meta.seed ? ordered_json(*meta.seed) : ordered_json();
  m["input"] = meta.input;
  m["version"] = meta.version;
  doc["meta"] = std::move(m);

  return doc.dump(2) + "\n";
}

void WriteReport(const CorpusScores& scores, const ReportMeta& meta,
                 const std::filesystem::path& out, ReportFormat format) {
  if (format == ReportFormat::kJson) {
    WriteFile(out, RenderJsonReport(scores, meta));
    return;
  }

  std::error_code ec;
  std::filesystem::create_directory(out, ec);
  if (!std::filesystem::is_directory(out)) {
    throw IoError("cannot create report directory '" + out.string() + "'");
  }

  std::ostringstream seg;
  seg << "seg_id,system_id,score,lp,npd,npos_penal,precision,recall,hpr,"
         "aligned_num,len_hyp,len_ref\n";
  for (const SegmentScore& s : scores.segments) {
    const FactorBreakdown& f = s.factors;
    seg << CsvField(s.seg_id) << ',' << CsvField(s.system_id) << ','
        << FormatReal(f.score) << ',' << FormatReal(f.lp) << ','
        << FormatReal(f.npd) << ',' << FormatReal(f.npos_penal) << ','
        << FormatReal(f.precision) << ',' << FormatReal(f.recall) << ','
        << FormatReal(f.hpr) << ',' << f.aligned_num << ',' << f.len_hyp << ','
        << f.len_ref << '\n';
  }
  WriteFile(out / "segments.csv", seg.str());

  std::ostringstream sys;
  sys << "system_id,segments,mean,rank\n";
  for (const SystemScore& s : scores.systems) {
    sys << CsvField(s.system_id) << ',' << s.segments << ','
        << FormatReal(s.mean) << ',' << s.rank << '\n';
  }
  WriteFile(out / "systems.csv", sys.str());

  if (!scores.agreement.empty()) {
    std::ostringstream agr;
    agr << "metric,gold_column,scale,scale_min,scale_max,inverted,segments,"
           "clamped,rmse,pearson\n";
    for (const Agreement& a : scores.agreement) {
      agr << CsvField(a.metric) << ',' << CsvField(a.column) << ','
          << CsvField(a.scale.name) << ',' << FormatReal(a.scale.min) << ','
          << FormatReal(a.scale.max) << ',' << (a.scale.inverted ? 1 : 0)
          << ',' << a.segments << ',' << a.clamped << ','
          << FormatReal(a.rmse) << ',' << PearsonText(a) << '\n';
    }
    WriteFile(out / "agreement.csv", agr.str());
  }

  std::ostringstream hist;
  hist << "series,bin,low,high,count\n";
  auto emit = [&](const std::string& series, const Histogram& h) {
    for (std::size_t i = 0; i < kHistogramBins; ++i) {
      hist << CsvField(series) << ',' << i << ',' << FormatReal(BinEdge(i))
           << ',' << FormatReal(BinEdge(i + 1)) << ',' << h[i] << '\n';
    }
  };
  emit("metric", scores.histogram);
  for (const Agreement& a : scores.agreement) {
    if (a.metric == "hlepor") emit("gold:" + a.column, a.gold_histogram);
  }
  WriteFile(out / "histograms.csv", hist.str());

  std::ostringstream m;
  m << "key,value\n";
  m << "alpha," << FormatReal(meta.params.alpha) << '\n';
  m << "beta," << FormatReal(meta.params.beta) << '\n';
  m << "n," << meta.params.n << '\n';
  m << "weight_elp," << FormatReal(meta.params.weight_elp) << '\n';
  m << "weight_pos," << FormatReal(meta.params.weight_pos) << '\n';
  m << "weight_pr," << FormatReal(meta.params.weight_pr) << '\n';
  m << "params_source," << CsvField(meta.params_source) << '\n';
  m << "seed," << (meta.seed ? std::to_string(*meta.seed) : "") << '\n';
  m << "input," << CsvField(meta.input) << '\n';
  m << "version," << CsvField(meta.version) << '\n';
  WriteFile(out / "meta.csv", m.str());
}

}  // namespace cushlepor
