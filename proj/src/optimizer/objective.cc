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

#include "cushlepor/objective.h"

#include <cmath>

#include "cushlepor/errors.h"
#include "cushlepor/presets.h"
#include "cushlepor/scoring.h"

namespace cushlepor {
namespace {

void RequireUsable(const Corpus& corpus) {
  if (corpus.empty()) throw DataError("objective: corpus is empty");
}

std::uint64_t Fnv1a(std::string_view text) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const char c : text) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

}  // namespace

double Objective(const Corpus& corpus, std::string_view gold_column,
                 const GoldScale& scale, const HLeporParams& params,
                 TokenizeMode mode) {
  RequireUsable(corpus);
  ScoreOptions options;
  options.tokenize = mode;
  const CorpusScores scores = ScoreCorpus(corpus, params, options);
  return ComputeAgreement(corpus, scores, gold_column, scale).rmse;
}

CorpusObjective::CorpusObjective(const Corpus& corpus, std::string gold_column,
                                 const GoldScale& scale, IntRange windows,
                                 TokenizeMode mode)
    : windows_(windows) {
  RequireUsable(corpus);
  ValidateScale(scale);
  if (windows.low < kMinWindow || windows.high > kMaxWindow ||
      windows.low > windows.high) {
    throw UsageError("objective: invalid window range");
  }
  for (const SegmentRecord& r : corpus.records) {
    const auto it = r.gold.find(gold_column);
    if (it == r.gold.end()) {
      ++excluded_;
      continue;
    }
    TokenSeq hyp = Tokenize(r.hypothesis, mode);
    TokenSeq ref = Tokenize(r.reference, mode);
    if (hyp.empty() || ref.empty()) {
      throw DegenerateInputError("segment " + r.seg_id + " (system " +
                                 r.system_id + "): " +
                                 (hyp.empty() ? "hypothesis" : "reference") +
                                 " is empty after tokenization");
    }
    hyps_.push_back(std::move(hyp));
    refs_.push_back(std::move(ref));
    gold_.push_back(NormalizeGold(it->second, scale, &clamped_));
  }
  if (gold_.empty()) {
    throw DataError("gold column '" + gold_column +
                    "' is missing from every segment");
  }
  for (int n = windows.low; n <= windows.high; ++n) {
    std::vector<AlignmentSummary> per_segment;
    per_segment.reserve(gold_.size());
    for (std::size_t i = 0; i < gold_.size(); ++i) {
      per_segment.push_back(Summarize(Align(hyps_[i], refs_[i], n),
                                      hyps_[i].length(), refs_[i].length()));
    }
    summaries_.push_back(std::move(per_segment));
  }
}

double CorpusObjective::operator()(const HLeporParams& params) const {
  ValidateParams(params);
  std::vector<double> metric(gold_.size());
  if (params.n >= windows_.low && params.n <= windows_.high) {
    const auto& cached = summaries_[static_cast<std::size_t>(params.n - windows_.low)];
    for (std::size_t i = 0; i < gold_.size(); ++i) {
      metric[i] = ScoreSummary(cached[i], params).score;
    }
  } else {
    for (std::size_t i = 0; i < gold_.size(); ++i) {
      metric[i] = ScoreTokens(hyps_[i], refs_[i], params).score;
    }
  }
  return Rmse(metric, gold_);
}

CorpusSplit SplitBySegmentHash(const Corpus& corpus, double heldout_fraction) {
  if (!(heldout_fraction >= 0.0 && heldout_fraction <= 1.0)) {
    throw UsageError("held-out fraction must lie in [0, 1]");
  }
  constexpr std::uint64_t kBuckets = 10000;
  const auto cutoff = static_cast<std::uint64_t>(
      std::llround(heldout_fraction * static_cast<double>(kBuckets)));
  CorpusSplit split;
  for (const SegmentRecord& r : corpus.records) {
    if (Fnv1a(r.seg_id) % kBuckets < cutoff) {
      split.heldout.records.push_back(r);
    } else {
      split.train.records.push_back(r);
    }
  }
  return split;
}

void ExportParams(const Trial& trial, const ExportProvenance& provenance,
                  const std::filesystem::path& out) {
  PresetFile file;
  file.params = trial.params;
  file.objective = trial.objective;
  file.seed = provenance.seed;
  file.budget = provenance.budget;
  file.gold_column = provenance.gold_column;
  file.corpus_sha256 = provenance.corpus_sha256;
  WritePresetFile(file, out);
}

}  // namespace cushlepor
