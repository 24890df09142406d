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

#ifndef CUSHLEPOR_ALIGNMENT_H_
#define CUSHLEPOR_ALIGNMENT_H_

#include <cstddef>
#include <vector>

#include "cushlepor/tokenizer.h"

namespace cushlepor {

// A matched (hypothesis, reference) position pair, both 1-based.
struct AlignedPair {
  std::size_t hyp_pos = 0;
  std::size_t ref_pos = 0;

  bool operator==(const AlignedPair&) const = default;
};

// One-to-one partial matching of identical tokens, ordered by hyp_pos.
struct Alignment {
  std::vector<AlignedPair> pairs;

  std::size_t aligned_num() const { return pairs.size(); }
};

// Greedy left-to-right word alignment.
//
// For every hypothesis position i (in order) the candidates are the
// unconsumed reference positions j holding the same token. The candidate with
// the highest context score wins, where the context score counts offsets
// k in {-n..-1, 1..n} for which hyp[i+k] == ref[j+k] (offsets falling off
// either sentence count as mismatches). Remaining ties go to the smallest
// |i - j|, then to the smallest j.
//
// Requires window >= 1.
Alignment Align(const TokenSeq& hyp, const TokenSeq& ref, int window);

}  // namespace cushlepor

#endif  // CUSHLEPOR_ALIGNMENT_H_
