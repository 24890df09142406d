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

#ifndef CUSHLEPOR_TOKENIZER_H_
#define CUSHLEPOR_TOKENIZER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace cushlepor {

// Case-folded word tokens of one sentence. Positions reported elsewhere are
// 1-based indices into `tokens`.
struct TokenSeq {
  std::vector<std::string> tokens;

  std::size_t length() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
  const std::string& at_position(std::size_t pos) const {
    return tokens.at(pos - 1);
  }

  bool operator==(const TokenSeq&) const = default;
};

enum class TokenizeMode {
  // Whitespace split, case fold, detach leading/trailing punctuation.
  kStandard,
  // Input is already tokenized: whitespace split and case fold only.
  kWhitespace,
};

TokenSeq Tokenize(std::string_view text,
                  TokenizeMode mode = TokenizeMode::kStandard);

// Simple one-to-one lowercase mapping of a UTF-8 string. Covers ASCII,
// Latin-1, Latin Extended-A, Greek and Cyrillic; other code points and
// invalid bytes pass through unchanged.
std::string CaseFold(std::string_view text);

}  // namespace cushlepor

#endif  // CUSHLEPOR_TOKENIZER_H_
