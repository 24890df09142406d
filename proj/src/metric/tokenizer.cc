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

#include "cushlepor/tokenizer.h"

#include <cstdint>

namespace cushlepor {
namespace {

// One decoded unit of the input. Invalid UTF-8 bytes become single units
// with valid == false and are copied through verbatim.
struct Unit {
  char32_t cp = 0;
  bool valid = false;
  std::string_view raw;
};

std::vector<Unit> Decode(std::string_view text) {
  std::vector<Unit> units;
  units.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const auto lead = static_cast<unsigned char>(text[i]);
    std::size_t len = 0;
    char32_t cp = 0;
    if (lead < 0x80) {
      len = 1;
      cp = lead;
    } else if ((lead & 0xE0) == 0xC0) {
      len = 2;
      cp = lead & 0x1F;
    } else if ((lead & 0xF0) == 0xE0) {
      len = 3;
      cp = lead & 0x0F;
    } else if ((lead & 0xF8) == 0xF0) {
      len = 4;
      cp = lead & 0x07;
    }
    bool ok = len > 0 && i + len <= text.size();
    for (std::size_t k = 1; ok && k < len; ++k) {
      const auto cont = static_cast<unsigned char>(text[i + k]);
      if ((cont & 0xC0) != 0x80) {
        ok = false;
      } else {
        cp = (cp << 6) | (cont & 0x3F);
      }
    }
    // Reject overlong forms, surrogates and out-of-range values.
    if (ok) {
      static constexpr char32_t kMinForLen[] = {0, 0, 0x80, 0x800, 0x10000};
      ok = cp >= kMinForLen[len] && cp <= 0x10FFFF &&
           !(cp >= 0xD800 && cp <= 0xDFFF);
    }
    if (ok) {
      units.push_back({cp, true, text.substr(i, len)});
      i += len;
    } else {
      units.push_back({0, false, text.substr(i, 1)});
      i += 1;
    }
  }
  return units;
}

void Encode(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool InRange(char32_t cp, char32_t lo, char32_t hi) {
  return cp >= lo && cp <= hi;
}

// Pairs laid out as (upper, lower) on consecutive code points.
bool EvenUpper(char32_t cp, char32_t lo, char32_t hi) {
  return InRange(cp, lo, hi) && (cp - lo) % 2 == 0;
}

char32_t FoldCodePoint(char32_t cp) {
  if (cp < 0x80) {
    return InRange(cp, 'A', 'Z') ? cp + 32 : cp;
  }
  if (InRange(cp, 0xC0, 0xDE) && cp != 0xD7) return cp + 32;
  if (cp == 0xB5) return 0x3BC;  // micro sign
  // Latin Extended-A.
  if (EvenUpper(cp, 0x100, 0x12F) || EvenUpper(cp, 0x132, 0x137) ||
      EvenUpper(cp, 0x14A, 0x177)) {
    return cp + 1;
  }
  if ((InRange(cp, 0x139, 0x148) || InRange(cp, 0x179, 0x17E)) && cp % 2 == 1) {
    return cp + 1;
  }
  if (cp == 0x178) return 0xFF;
  if (cp == 0x17F) return 's';
  // Greek.
  if (InRange(cp, 0x391, 0x3A1) || InRange(cp, 0x3A3, 0x3AB)) return cp + 32;
  if (cp == 0x386) return 0x3AC;
  if (InRange(cp, 0x388, 0x38A)) return cp + 37;
  if (cp == 0x38C) return 0x3CC;
  if (InRange(cp, 0x38E, 0x38F)) return cp + 63;
  if (cp == 0x3C2) return 0x3C3;  // final sigma
  // Cyrillic.
  if (InRange(cp, 0x410, 0x42F)) return cp + 32;
  if (InRange(cp, 0x400, 0x40F)) return cp + 80;
  if (EvenUpper(cp, 0x460, 0x481) || EvenUpper(cp, 0x48A, 0x4BF) ||
      EvenUpper(cp, 0x4D0, 0x52F)) {
    return cp + 1;
  }
  if (InRange(cp, 0x4C1, 0x4CE) && cp % 2 == 1) return cp + 1;
  if (cp == 0x4C0) return 0x4CF;
  return cp;
}

bool IsSpace(const Unit& u) {
  if (!u.valid) return false;
  const char32_t cp = u.cp;
  return cp == ' ' || InRange(cp, 0x09, 0x0D) || cp == 0x85 || cp == 0xA0 ||
         cp == 0x1680 || InRange(cp, 0x2000, 0x200A) || cp == 0x2028 ||
         cp == 0x2029 || cp == 0x202F || cp == 0x205F || cp == 0x3000;
}

bool IsPunct(const Unit& u) {
  if (!u.valid) return false;
  const char32_t cp = u.cp;
  if (cp < 0x80) {
    return InRange(cp, 0x21, 0x2F) || InRange(cp, 0x3A, 0x40) ||
           InRange(cp, 0x5B, 0x60) || InRange(cp, 0x7B, 0x7E);
  }
  return InRange(cp, 0xA1, 0xBF) || cp == 0xD7 || cp == 0xF7 ||
         InRange(cp, 0x2010, 0x2027) || InRange(cp, 0x2030, 0x205E) ||
         InRange(cp, 0x3001, 0x3003) || InRange(cp, 0x3008, 0x3011) ||
         InRange(cp, 0x3014, 0x301F) || InRange(cp, 0xFF01, 0xFF0F) ||
         InRange(cp, 0xFF1A, 0xFF20) || InRange(cp, 0xFF3B, 0xFF40) ||
         InRange(cp, 0xFF5B, 0xFF65);
}

void AppendFolded(const Unit& u, std::string& out) {
  if (u.valid) {
    Encode(FoldCodePoint(u.cp), out);
  } else {
    out.append(u.raw);
  }
}

std::string FoldRange(const std::vector<Unit>& units, std::size_t begin,
                      std::size_t end) {
  std::string out;
  for (std::size_t k = begin; k < end; ++k) AppendFolded(units[k], out);
  return out;
}

}  // namespace

std::string CaseFold(std::string_view text) {
  const std::vector<Unit> units = Decode(text);
  return FoldRange(units, 0, units.size());
}

TokenSeq Tokenize(std::string_view text, TokenizeMode mode) {
  const std::vector<Unit> units = Decode(text);
  TokenSeq seq;
  std::size_t i = 0;
  while (i < units.size()) {
    if (IsSpace(units[i])) {
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < units.size() && !IsSpace(units[end])) ++end;

    if (mode == TokenizeMode::kWhitespace) {
      seq.tokens.push_back(FoldRange(units, i, end));
      i = end;
      continue;
    }

    std::size_t core_begin = i;
    while (core_begin < end && IsPunct(units[core_begin])) {
      seq.tokens.push_back(FoldRange(units, core_begin, core_begin + 1));
      ++core_begin;
    }
    std::size_t core_end = end;
    while (core_end > core_begin && IsPunct(units[core_end - 1])) --core_end;
    if (core_begin < core_end) {
      seq.tokens.push_back(FoldRange(units, core_begin, core_end));
    }
    for (std::size_t k = core_end; k < end; ++k) {
      seq.tokens.push_back(FoldRange(units, k, k + 1));
    }
    i = end;
  }
  return seq;
}

}  // namespace cushlepor
