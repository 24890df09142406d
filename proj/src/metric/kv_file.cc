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

#include "cushlepor/kv_file.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "cushlepor/errors.h"

namespace cushlepor {

std::string_view Trim(std::string_view text) {
  constexpr std::string_view kSpace = " \t\r\n";
  const auto begin = text.find_first_not_of(kSpace);
  if (begin == std::string_view::npos) return {};
  const auto end = text.find_last_not_of(kSpace);
  return text.substr(begin, end - begin + 1);
}

KeyValueMap ParseKeyValues(std::string_view text, std::string_view origin) {
  KeyValueMap out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    const std::string_view raw =
        text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
    ++line_no;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    const std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    const std::string where =
        std::string(origin) + ":" + std::to_string(line_no);
    if (eq == std::string_view::npos) {
      throw DataError(where + ": expected 'key = value'");
    }
    const std::string key(Trim(line.substr(0, eq)));
    const std::string value(Trim(line.substr(eq + 1)));
    if (key.empty()) throw DataError(where + ": empty key");
    if (!out.emplace(key, value).second) {
      throw DataError(where + ": duplicate key '" + key + "'");
    }
  }
  return out;
}

KeyValueMap ReadKeyValueFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseKeyValues(buffer.str(), path.string());
}

std::string FormatReal(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

double ParseReal(std::string_view text, std::string_view what) {
  text = Trim(text);
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto result = std::from_chars(text.data(), end, value);
  if (text.empty() || result.ec != std::errc() || result.ptr != end ||
      !std::isfinite(value)) {
    throw DataError(std::string(what) + ": not a finite number: '" +
                    std::string(text) + "'");
  }
  return value;
}

std::int64_t ParseInteger(std::string_view text, std::string_view what) {
  text = Trim(text);
  std::int64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto result = std::from_chars(text.data(), end, value);
  if (text.empty() || result.ec != std::errc() || result.ptr != end) {
    throw DataError(std::string(what) + ": not an integer: '" +
                    std::string(text) + "'");
  }
  return value;
}

std::uint64_t ParseUnsigned(std::string_view text, std::string_view what) {
  text = Trim(text);
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto result = std::from_chars(text.data(), end, value);
  if (text.empty() || result.ec != std::errc() || result.ptr != end) {
    throw DataError(std::string(what) + ": not an unsigned integer: '" +
                    std::string(text) + "'");
  }
  return value;
}

}  // namespace cushlepor
