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

#ifndef CUSHLEPOR_ERRORS_H_
#define CUSHLEPOR_ERRORS_H_

#include <stdexcept>
#include <string>

namespace cushlepor {

// Coarse error classes; the CLI maps them onto exit codes 1, 2 and 3.
enum class ErrorKind { kUsage, kData, kRuntime };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Bad parameter values, unknown preset names, malformed flags.
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& message)
      : Error(ErrorKind::kUsage, message) {}
};

// Problems with input data: malformed rows, empty segments, missing columns.
class DataError : public Error {
 public:
  explicit DataError(const std::string& message)
      : Error(ErrorKind::kData, message) {}
};

// A hypothesis or reference that is empty after tokenization.
class DegenerateInputError : public DataError {
 public:
  explicit DegenerateInputError(const std::string& message)
      : DataError(message) {}
};

// Unknown preset pair/flavor.
class LookupError : public UsageError {
 public:
  explicit LookupError(const std::string& message) : UsageError(message) {}
};

// Statistic undefined for the given inputs (zero variance, length mismatch).
class StatisticsError : public DataError {
 public:
  explicit StatisticsError(const std::string& message) : DataError(message) {}
};

// Filesystem failures.
class IoError : public Error {
 public:
  explicit IoError(const std::string& message)
      : Error(ErrorKind::kRuntime, message) {}
};

}  // namespace cushlepor

#endif  // CUSHLEPOR_ERRORS_H_
