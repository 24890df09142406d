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

#include "cushlepor/alignment.h"

#include <string>

#include "cushlepor/errors.h"

namespace cushlepor {
namespace {

// Works on 0-based indices internally.
int ContextScore(const std::vector<std::string>& hyp,
                 const std::vector<std::string>& ref, std::ptrdiff_t i,
                 std::ptrdiff_t j, int window) {
  const auto hyp_len = static_cast<std::ptrdiff_t>(hyp.size());
  const auto ref_len = static_cast<std::ptrdiff_t>(ref.size());
  int score = 0;
  for (std::ptrdiff_t k = -window; k <= window; ++k) {
    if (k == 0) continue;
    const std::ptrdiff_t hi = i + k;
    const std::ptrdiff_t rj = j + k;
    if (hi < 0 || hi >= hyp_len || rj < 0 || rj >= ref_len) continue;
    if (hyp[hi] == ref[rj]) ++score;
  }
  return score;
}

}  // namespace

Alignment Align(const TokenSeq& hyp, const TokenSeq& ref, int window) {
  if (window < 1) {
    throw UsageError("alignment window must be >= 1, got " +
                     std::to_string(window));
  }
  const auto& h = hyp.tokens;
  const auto& r = ref.tokens;
  std::vector<bool> consumed(r.size(), false);

  Alignment alignment;
  for (std::size_t i = 0; i < h.size(); ++i) {
    std::ptrdiff_t best = -1;
    int best_context = -1;
    std::size_t best_distance = 0;
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (consumed[j] || h[i] != r[j]) continue;
      const int context = ContextScore(
          h, r, static_cast<std::ptrdiff_t>(i), static_cast<std::ptrdiff_t>(j),
          window);
      const std::size_t distance = i > j ? i - j : j - i;
      // j ascends, so strict comparisons keep the smallest j on full ties.
      if (context > best_context ||
          (context == best_context && distance < best_distance)) {
        best = static_cast<std::ptrdiff_t>(j);
        best_context = context;
        best_distance = distance;
      }
    }
    if (best >= 0) {
      consumed[static_cast<std::size_t>(best)] = true;
      alignment.pairs.push_back({i + 1, static_cast<std::size_t>(best) + 1});
    }
  }
  return alignment;
}

}  // namespace cushlepor
