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

#ifndef CUSHLEPOR_TUNER_H_
#define CUSHLEPOR_TUNER_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cushlepor/params.h"
#include "cushlepor/search_space.h"

namespace cushlepor {

// One objective evaluation.
struct Trial {
  std::size_t index = 0;
  HLeporParams params;
  double objective = 0.0;
  // Seconds spent in the objective; only recorded when requested because it
  // makes logs non-reproducible.
  std::optional<double> wall_time;
};

struct TuneResult {
  Trial best;  // lowest objective, earliest index on ties
  std::vector<Trial> trials;
};

// Must be deterministic, finite and non-negative.
using ObjectiveFn = std::function<double(const HLeporParams&)>;

struct TpeConfig {
  int budget = 300;
  int n_startup = 20;     // uniform warmup trials
  double gamma = 0.25;    // fraction of trials forming the "good" set
  int n_candidates = 24;  // draws from the good density per step
  std::uint64_t seed = 0;
  double prior_weight = 1.0;
};

// Throws UsageError for budget < 1, n_startup < 0, gamma outside (0, 1),
// n_candidates < 1 or a non-positive prior weight.
void ValidateTpeConfig(const TpeConfig& config);

struct TuneOptions {
  bool record_timing = false;
  // Random search only: evaluate trials on this many threads. Draws happen
  // up front and the log stays in draw order.
  unsigned threads = 1;
};

// `budget` i.i.d. uniform draws; the same seed gives the same trial log.
TuneResult TuneRandom(const ObjectiveFn& objective, const SearchSpace& space,
                      int budget, std::uint64_t seed,
                      const TuneOptions& options = {});

// Tree-structured Parzen estimator. The first n_startup trials are drawn
// exactly as TuneRandom draws them under the same seed. After that, each
// step splits the completed trials (sorted by objective, ties by index) into
// the best ceil(gamma * t) and the rest, fits per-dimension densities l
// (good) and g (rest), draws n_candidates points from l and evaluates the
// one maximizing prod_d l_d(x) / g_d(x). Strictly sequential.
TuneResult TuneTpe(const ObjectiveFn& objective, const SearchSpace& space,
                   const TpeConfig& config, const TuneOptions& options = {});

// JSONL: {"index":..,"params":{..},"objective":..,"wall_time":..|null}
std::string FormatTrialLog(const std::vector<Trial>& trials);
std::vector<Trial> ParseTrialLog(std::string_view text);
void WriteTrialLog(const std::vector<Trial>& trials,
                   const std::filesystem::path& path);

}  // namespace cushlepor

#endif  // CUSHLEPOR_TUNER_H_
