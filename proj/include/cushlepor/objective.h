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

#ifndef CUSHLEPOR_OBJECTIVE_H_
#define CUSHLEPOR_OBJECTIVE_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cushlepor/corpus.h"
#include "cushlepor/hlepor.h"
#include "cushlepor/search_space.h"
#include "cushlepor/stats.h"
#include "cushlepor/tuner.h"

namespace cushlepor {

// RMSE between hLEPOR under `params` and the normalized gold column, over
// the segments carrying that column. Scores through ScoreCorpus. Throws
// DataError for an empty corpus or a column no segment carries.
double Objective(const Corpus& corpus, std::string_view gold_column,
                 const GoldScale& scale, const HLeporParams& params,
                 TokenizeMode mode = TokenizeMode::kStandard);

// The same objective, prepared for repeated evaluation: tokenization and
// alignment (for every window in `windows`) happen once up front, so each
// call only recombines cached alignment summaries. Results are bitwise equal
// to Objective(). Immutable after construction; safe to call concurrently.
class CorpusObjective {
 public:
  CorpusObjective(const Corpus& corpus, std::string gold_column,
                  const GoldScale& scale, IntRange windows,
                  TokenizeMode mode = TokenizeMode::kStandard);

  double operator()(const HLeporParams& params) const;

  std::size_t segments() const { return gold_.size(); }
  std::size_t excluded() const { return excluded_; }
  std::size_t clamped() const { return clamped_; }

 private:
  std::vector<TokenSeq> hyps_;
  std::vector<TokenSeq> refs_;
  std::vector<double> gold_;
  IntRange windows_;
  // summaries_[n - windows_.low][segment]
  std::vector<std::vector<AlignmentSummary>> summaries_;
  std::size_t excluded_ = 0;
  std::size_t clamped_ = 0;
};

struct CorpusSplit {
  Corpus train;
  Corpus heldout;
};

// Deterministic split on a 64-bit FNV-1a hash of seg_id: every system's copy
// of a segment lands on the same side. heldout_fraction in [0, 1].
CorpusSplit SplitBySegmentHash(const Corpus& corpus,
                               double heldout_fraction = 0.2);

struct ExportProvenance {
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> budget;
  std::optional<std::string> gold_column;
  std::optional<std::string> corpus_sha256;
};

// Writes the trial's parameters and provenance as a preset file, loadable
// with LoadPresetFile. Throws IoError naming the path.
void ExportParams(const Trial& trial, const ExportProvenance& provenance,
                  const std::filesystem::path& out);

}  // namespace cushlepor

#endif  // CUSHLEPOR_OBJECTIVE_H_
