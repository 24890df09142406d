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

#ifndef CUSHLEPOR_HLEPOR_H_
#define CUSHLEPOR_HLEPOR_H_

#include <cstddef>
#include <string_view>

#include "cushlepor/alignment.h"
#include "cushlepor/params.h"
#include "cushlepor/tokenizer.h"

namespace cushlepor {

// Every intermediate factor of one segment score.
struct FactorBreakdown {
  double lp = 0.0;          // length penalty, (0, 1]
  double npd = 0.0;         // mean absolute position difference, >= 0
  double npos_penal = 0.0;  // exp(-npd)
  double precision = 0.0;
  double recall = 0.0;
  double hpr = 0.0;    // weighted harmonic mean of precision and recall
  double score = 0.0;  // final hLEPOR, [0, 1]

  std::size_t aligned_num = 0;
  std::size_t len_hyp = 0;
  std::size_t len_ref = 0;

  bool operator==(const FactorBreakdown&) const = default;
};

// Everything about an alignment the score depends on. Once a pair has been
// aligned under a window n, rescoring it for any (alpha, beta, weights) only
// needs this.
struct AlignmentSummary {
  std::size_t aligned_num = 0;
  std::size_t len_hyp = 0;
  std::size_t len_ref = 0;
  std::size_t position_diff_sum = 0;  // sum of |hyp_pos - ref_pos|
};

// 1 for equal lengths, exp(1 - longer/shorter) otherwise. Throws
// DegenerateInputError for a zero length.
double LengthPenalty(std::size_t len_hyp, std::size_t len_ref);

// (1/len_hyp) * sum |hyp_pos - ref_pos| over matched pairs, on raw 1-based
// positions. Unmatched hypothesis words add nothing.
double Npd(const Alignment& alignment, std::size_t len_hyp);

double NposPenal(double npd);

// (alpha + beta) P R / (alpha P + beta R) with P = aligned/len_hyp and
// R = aligned/len_ref; 0 when nothing is aligned.
double Hpr(std::size_t aligned_num, std::size_t len_hyp, std::size_t len_ref,
           double alpha, double beta);

// Weighted harmonic mean of the three factors. Defined as 0 when hpr is 0.
double CombineFactors(double lp, double npos_penal, double hpr,
                      const HLeporParams& params);

AlignmentSummary Summarize(const Alignment& alignment, std::size_t len_hyp,
                           std::size_t len_ref);

// Scores an already aligned pair; params.n is not consulted.
FactorBreakdown ScoreSummary(const AlignmentSummary& summary,
                             const HLeporParams& params);

// Aligns with params.n and scores. Both sides must be non-empty.
FactorBreakdown ScoreTokens(const TokenSeq& hyp, const TokenSeq& ref,
                            const HLeporParams& params);

// Full pipeline on raw text. Throws DegenerateInputError naming the side that
// is empty after tokenization.
FactorBreakdown Hlepor(std::string_view hypothesis, std::string_view reference,
                       const HLeporParams& params,
                       TokenizeMode mode = TokenizeMode::kStandard);

}  // namespace cushlepor

#endif  // CUSHLEPOR_HLEPOR_H_
