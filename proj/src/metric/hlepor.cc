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

#include "cushlepor/hlepor.h"

#include <cmath>
#include <string>

#include "cushlepor/errors.h"

namespace cushlepor {
namespace {

void RequireNonEmpty(std::size_t len_hyp, std::size_t len_ref) {
  if (len_hyp == 0) throw DegenerateInputError("hypothesis is empty");
  if (len_ref == 0) throw DegenerateInputError("reference is empty");
}

}  // namespace

double LengthPenalty(std::size_t len_hyp, std::size_t len_ref) {
  RequireNonEmpty(len_hyp, len_ref);
  if (len_hyp == len_ref) return 1.0;
  const auto hyp = static_cast<double>(len_hyp);
  const auto ref = static_cast<double>(len_ref);
  return len_hyp < len_ref ? std::exp(1.0 - ref / hyp)
                           : std::exp(1.0 - hyp / ref);
}

double Npd(const Alignment& alignment, std::size_t len_hyp) {
  if (len_hyp == 0) throw DegenerateInputError("hypothesis is empty");
  std::size_t sum = 0;
  for (const AlignedPair& p : alignment.pairs) {
    sum += p.hyp_pos > p.ref_pos ? p.hyp_pos - p.ref_pos : p.ref_pos - p.hyp_pos;
  }
  return static_cast<double>(sum) / static_cast<double>(len_hyp);
}

double NposPenal(double npd) { return std::exp(-npd); }

double Hpr(std::size_t aligned_num, std::size_t len_hyp, std::size_t len_ref,
           double alpha, double beta) {
  RequireNonEmpty(len_hyp, len_ref);
  if (aligned_num == 0) return 0.0;
  const double precision =
      static_cast<double>(aligned_num) / static_cast<double>(len_hyp);
  const double recall =
      static_cast<double>(aligned_num) / static_cast<double>(len_ref);
  return (alpha + beta) * precision * recall /
         (alpha * precision + beta * recall);
}

double CombineFactors(double lp, double npos_penal, double hpr,
                      const HLeporParams& params) {
  if (hpr == 0.0) return 0.0;
  const double total = params.weight_elp + params.weight_pos + params.weight_pr;
  return total / (params.weight_elp / lp + params.weight_pos / npos_penal +
                  params.weight_pr / hpr);
}

AlignmentSummary Summarize(const Alignment& alignment, std::size_t len_hyp,
                           std::size_t len_ref) {
  AlignmentSummary summary;
  summary.aligned_num = alignment.aligned_num();
  summary.len_hyp = len_hyp;
  summary.len_ref = len_ref;
  for (const AlignedPair& p : alignment.pairs) {
    summary.position_diff_sum +=
        p.hyp_pos > p.ref_pos ? p.hyp_pos - p.ref_pos : p.ref_pos - p.hyp_pos;
  }
  return summary;
}

FactorBreakdown ScoreSummary(const AlignmentSummary& summary,
                             const HLeporParams& params) {
  RequireNonEmpty(summary.len_hyp, summary.len_ref);
  FactorBreakdown out;
  out.aligned_num = summary.aligned_num;
  out.len_hyp = summary.len_hyp;
  out.len_ref = summary.len_ref;
  out.lp = LengthPenalty(summary.len_hyp, summary.len_ref);
  out.npd = static_cast<double>(summary.position_diff_sum) /
            static_cast<double>(summary.len_hyp);
  out.npos_penal = NposPenal(out.npd);
  out.precision = static_cast<double>(summary.aligned_num) /
                  static_cast<double>(summary.len_hyp);
  out.recall = static_cast<double>(summary.aligned_num) /
               static_cast<double>(summary.len_ref);
  out.hpr = Hpr(summary.aligned_num, summary.len_hyp, summary.len_ref,
                params.alpha, params.beta);
  out.score = CombineFactors(out.lp, out.npos_penal, out.hpr, params);
  return out;
}

FactorBreakdown ScoreTokens(const TokenSeq& hyp, const TokenSeq& ref,
                            const HLeporParams& params) {
  ValidateParams(params);
  RequireNonEmpty(hyp.length(), ref.length());
  const Alignment alignment = Align(hyp, ref, params.n);
  return ScoreSummary(Summarize(alignment, hyp.length(), ref.length()), params);
}

FactorBreakdown Hlepor(std::string_view hypothesis, std::string_view reference,
                       const HLeporParams& params, TokenizeMode mode) {
  ValidateParams(params);
  const TokenSeq hyp = Tokenize(hypothesis, mode);
  const TokenSeq ref = Tokenize(reference, mode);
  if (hyp.empty()) {
    throw DegenerateInputError("hypothesis is empty after tokenization");
  }
  if (ref.empty()) {
    throw DegenerateInputError("reference is empty after tokenization");
  }
  return ScoreTokens(hyp, ref, params);
}

}  // namespace cushlepor
