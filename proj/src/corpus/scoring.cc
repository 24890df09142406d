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

#include "cushlepor/scoring.h"

#include <algorithm>
#include <exception>
#include <map>
#include <thread>

#include "cushlepor/errors.h"

namespace cushlepor {
namespace {

std::string SegmentLabel(const SegmentRecord& r) {
  return "segment " + r.seg_id + " (system " + r.system_id + ")";
}

FactorBreakdown ScoreRecord(const SegmentRecord& record,
                            const HLeporParams& params, TokenizeMode mode) {
  try {
    return Hlepor(record.hypothesis, record.reference, params, mode);
  } catch (const DegenerateInputError& e) {
    throw DegenerateInputError(SegmentLabel(record) + ": " + e.what());
  }
}

// Scores [begin, end) into `out`; stops at the first failure and returns it.
std::exception_ptr ScoreRange(const Corpus& corpus, const HLeporParams& params,
                              TokenizeMode mode, std::size_t begin,
                              std::size_t end,
                              std::vector<SegmentScore>& out) {
  try {
    for (std::size_t i = begin; i < end; ++i) {
      const SegmentRecord& r = corpus.records[i];
      out[i] = {r.seg_id, r.system_id, ScoreRecord(r, params, mode)};
    }
  } catch (...) {
    return std::current_exception();
  }
  return nullptr;
}

// Order-independent mean: summing in sorted order makes the result depend
// only on the multiset of values.
double StableMean(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  double sum = 0.0;
  for (const double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

Agreement Summarize(std::string column, const GoldScale& scale,
                    const std::vector<double>& metric,
                    const std::vector<double>& gold, std::size_t clamped) {
  Agreement a;
  a.column = std::move(column);
  a.scale = scale;
  a.segments = metric.size();
  a.clamped = clamped;
  a.rmse = Rmse(metric, gold);
  try {
    a.pearson = Pearson(metric, gold);
  } catch (const StatisticsError& e) {
    a.pearson_note = e.what();
  }
  a.gold_histogram = BuildHistogram(gold);
  return a;
}

}  // namespace

CorpusScores ScoreCorpus(const Corpus& corpus, const HLeporParams& params,
                         const ScoreOptions& options) {
  ValidateParams(params);
  CorpusScores scores;
  const std::size_t total = corpus.size();
  scores.segments.resize(total);

  const std::size_t workers =
      std::clamp<std::size_t>(options.threads, 1, std::max<std::size_t>(total, 1));
  if (workers <= 1) {
    if (auto error = ScoreRange(corpus, params, options.tokenize, 0, total,
                                scores.segments)) {
      std::rethrow_exception(error);
    }
  } else {
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      const std::size_t chunk = (total + workers - 1) / workers;
      for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = std::min(total, w * chunk);
        const std::size_t end = std::min(total, begin + chunk);
        pool.emplace_back([&, w, begin, end] {
          errors[w] = ScoreRange(corpus, params, options.tokenize, begin, end,
                                 scores.segments);
        });
      }
    }
    for (const auto& error : errors) {
      if (error) std::rethrow_exception(error);
    }
  }

  std::map<std::string, std::vector<double>> by_system;
  std::vector<double> all;
  all.reserve(total);
  for (const SegmentScore& s : scores.segments) {
    auto [it, inserted] = by_system.try_emplace(s.system_id);
    if (inserted) scores.systems.push_back({s.system_id, 0, 0.0, 0});
    it->second.push_back(s.factors.score);
    all.push_back(s.factors.score);
  }
  for (SystemScore& sys : scores.systems) {
    const auto& values = by_system.at(sys.system_id);
    sys.segments = values.size();
    sys.mean = StableMean(values);
  }

  std::vector<std::size_t> order(scores.systems.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const SystemScore& x = scores.systems[a];
    const SystemScore& y = scores.systems[b];
    if (x.mean != y.mean) return x.mean > y.mean;
    return x.system_id < y.system_id;
  });
  for (std::size_t r = 0; r < order.size(); ++r) {
    scores.systems[order[r]].rank = r + 1;
  }

  scores.histogram = BuildHistogram(all);
  return scores;
}

Agreement ComputeAgreement(const Corpus& corpus, const CorpusScores& scores,
                           std::string_view column, const GoldScale& scale) {
  ValidateScale(scale);
  if (scores.segments.size() != corpus.size()) {
    throw UsageError("scores do not belong to this corpus");
  }
  std::vector<double> metric;
  std::vector<double> gold;
  std::size_t clamped = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& g = corpus.records[i].gold;
    const auto it = g.find(column);
    if (it == g.end()) continue;
    metric.push_back(scores.segments[i].factors.score);
    gold.push_back(NormalizeGold(it->second, scale, &clamped));
  }
  if (metric.empty()) {
    throw DataError("gold column '" + std::string(column) +
                    "' is missing from every segment");
  }
  return Summarize(std::string(column), scale, metric, gold, clamped);
}

Agreement ComputeColumnAgreement(const Corpus& corpus,
                                 std::string_view metric_column,
                                 std::string_view gold_column,
                                 const GoldScale& scale) {
  ValidateScale(scale);
  std::vector<double> metric;
  std::vector<double> gold;
  std::size_t clamped = 0;
  for (const SegmentRecord& r : corpus.records) {
    const auto m = r.gold.find(metric_column);
    const auto g = r.gold.find(gold_column);
    if (m == r.gold.end() || g == r.gold.end()) continue;
    metric.push_back(m->second);
    gold.push_back(NormalizeGold(g->second, scale, &clamped));
  }
  if (metric.empty()) {
    throw DataError("no segment carries both '" + std::string(metric_column) +
                    "' and '" + std::string(gold_column) + "'");
  }
  Agreement a =
      Summarize(std::string(gold_column), scale, metric, gold, clamped);
  a.metric = std::string(metric_column);
  return a;
}

}  // namespace cushlepor
