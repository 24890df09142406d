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

#ifndef CUSHLEPOR_SCORING_H_
#define CUSHLEPOR_SCORING_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cushlepor/corpus.h"
#include "cushlepor/hlepor.h"
#include "cushlepor/params.h"
#include "cushlepor/stats.h"

namespace cushlepor {

struct SegmentScore {
  std::string seg_id;
  std::string system_id;
  FactorBreakdown factors;
};

struct SystemScore {
  std::string system_id;
  std::size_t segments = 0;
  double mean = 0.0;
  std::size_t rank = 0;  // 1 = highest mean; ties ordered by system_id
};

// Agreement between the metric and one gold column, over the segments that
// carry a value for it.
struct Agreement {
  std::string metric = "hlepor";  // or the external metric column
  std::string column;
  GoldScale scale;
  std::size_t segments = 0;
  std::size_t clamped = 0;  // gold values outside the scale
  double rmse = 0.0;
  std::optional<double> pearson;  // absent when undefined
  std::string pearson_note;       // why pearson is absent
  Histogram gold_histogram{};     // of normalized gold values
};

struct CorpusScores {
  std::vector<SegmentScore> segments;  // corpus order
  std::vector<SystemScore> systems;    // order of first appearance
  Histogram histogram{};               // of segment scores
  std::vector<Agreement> agreement;
};

struct ScoreOptions {
  TokenizeMode tokenize = TokenizeMode::kStandard;
  // Segments are split into contiguous chunks across this many threads;
  // results are identical for every value.
  unsigned threads = 1;
};

// Throws DegenerateInputError / UsageError with the offending segment's
// identity prepended.
CorpusScores ScoreCorpus(const Corpus& corpus, const HLeporParams& params,
                         const ScoreOptions& options = {});

// Compares the metric scores with a gold column (normalized by `scale`).
// Throws DataError when no segment carries the column.
Agreement ComputeAgreement(const Corpus& corpus, const CorpusScores& scores,
                           std::string_view column, const GoldScale& scale);

// Same as ComputeAgreement but against an arbitrary external metric column
// (already on a [0, 1] scale), e.g. a precomputed BLEU column.
Agreement ComputeColumnAgreement(const Corpus& corpus,
                                 std::string_view metric_column,
                                 std::string_view gold_column,
                                 const GoldScale& scale);

}  // namespace cushlepor

#endif  // CUSHLEPOR_SCORING_H_
