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

// Flat "key = value" text files, shared by preset files and CLI config
// files. Blank lines and lines starting with '#' are ignored.

#ifndef CUSHLEPOR_KV_FILE_H_
#define CUSHLEPOR_KV_FILE_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>

namespace cushlepor {

using KeyValueMap = std::map<std::string, std::string, std::less<>>;

// Throws DataError (with `origin` and the line number) on malformed lines
// or duplicate keys.
KeyValueMap ParseKeyValues(std::string_view text, std::string_view origin);

// Throws IoError if the file cannot be read.
KeyValueMap ReadKeyValueFile(const std::filesystem::path& path);

// Shortest decimal representation that parses back to the same double.
std::string FormatReal(double value);

// Strict full-string parses; throw DataError mentioning `what`.
double ParseReal(std::string_view text, std::string_view what);
std::int64_t ParseInteger(std::string_view text, std::string_view what);
std::uint64_t ParseUnsigned(std::string_view text, std::string_view what);

std::string_view Trim(std::string_view text);

}  // namespace cushlepor

#endif  // CUSHLEPOR_KV_FILE_H_
