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

#ifndef CUSHLEPOR_CLI_H_
#define CUSHLEPOR_CLI_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cushlepor/search_space.h"
#include "cushlepor/tuner.h"

namespace cushlepor::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitData = 2,
  kExitRuntime = 3,
};

enum class Command { kScore, kTune, kReport, kPresets };

// Fully resolved job description for one invocation.
struct RunConfig {
  Command command = Command::kPresets;

  std::string input;
  std::string format;   // "tsv", "jsonl" or empty to guess from the extension
  std::string columns;  // column map spec
  bool strict = false;
  std::string tokenize = "standard";
  unsigned threads = 1;

  // Parameter sources; exactly one for score/report.
  std::optional<std::string> preset;
  std::optional<std::string> params_file;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<int> n;
  std::optional<double> weight_elp;
  std::optional<double> weight_pos;
  std::optional<double> weight_pr;

  std::optional<std::string> gold;
  std::string gold_scale = "unit";
  std::vector<std::string> compare_columns;

  std::string tuner = "tpe";
  TpeConfig tpe;
  std::optional<std::uint64_t> seed;
  SearchSpace space;
  bool split_holdout = false;
  double holdout_fraction = 0.2;
  std::string baseline_preset = "en-de:default";
  bool record_timing = false;

  std::string out;
  std::string report_format = "json";

  bool quiet = false;
  bool verbose = false;
};

// Each command returns an exit code and never throws: failures print one
// line "cushlepor: error[<usage|data|runtime>]: <message>" to `err`.
int CmdScore(const RunConfig& config, std::ostream& out, std::ostream& err);
int CmdReport(const RunConfig& config, std::ostream& out, std::ostream& err);
int CmdTune(const RunConfig& config, std::ostream& out, std::ostream& err);
int CmdPresets(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv (flags > --config file > defaults) and dispatches.
int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace cushlepor::cli

#endif  // CUSHLEPOR_CLI_H_
