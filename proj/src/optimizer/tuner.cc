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

#include "cushlepor/tuner.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <limits>
#include <thread>

#include "cushlepor/errors.h"
#include "cushlepor/kv_file.h"
#include "cushlepor/parzen.h"
#include "json.hpp"

namespace cushlepor {
namespace {

using nlohmann::ordered_json;

Trial Evaluate(const ObjectiveFn& objective, const HLeporParams& params,
               std::size_t index, bool record_timing) {
  const auto start = std::chrono::steady_clock::now();
  const double value = objective(params);
  const auto stop = std::chrono::steady_clock::now();
  if (!std::isfinite(value) || value < 0.0) {
    throw DataError("objective returned " + FormatReal(value) + " for trial " +
                    std::to_string(index) + " " + ToString(params));
  }
  Trial trial{index, params, value, std::nullopt};
  if (record_timing) {
    trial.wall_time = std::chrono::duration<double>(stop - start).count();
  }
  return trial;
}

const Trial& BestOf(const std::vector<Trial>& trials) {
  // Strict comparison keeps the earliest trial on ties.
  const Trial* best = &trials.front();
  for (const Trial& t : trials) {
    if (t.objective < best->objective) best = &t;
  }
  return *best;
}

// Draws the next TPE point from the completed trials.
HLeporParams ProposeTpe(const std::vector<Trial>& trials,
                        const SearchSpace& space, const TpeConfig& config,
                        Rng& rng) {
  const std::size_t t = trials.size();
  std::vector<std::size_t> order(t);
  for (std::size_t i = 0; i < t; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (trials[a].objective != trials[b].objective) {
      return trials[a].objective < trials[b].objective;
    }
    return a < b;
  });
  const auto n_good = std::min(
      t, std::max<std::size_t>(
             1, static_cast<std::size_t>(
                    std::ceil(config.gamma * static_cast<double>(t)))));

  struct RealModel {
    TruncatedParzen good;
    TruncatedParzen bad;
  };
  std::vector<RealModel> real_models;
  real_models.reserve(kRealDimensions.size());
  for (const RealDimension& dim : kRealDimensions) {
    std::vector<double> good;
    std::vector<double> bad;
    for (std::size_t r = 0; r < t; ++r) {
      const double v = trials[order[r]].params.*dim.field;
      (r < n_good ? good : bad).push_back(v);
    }
    const RealRange& range = space.*dim.range;
    real_models.push_back(
        {TruncatedParzen(good, range.low, range.high, config.prior_weight),
         TruncatedParzen(bad, range.low, range.high, config.prior_weight)});
  }
  std::vector<int> good_n;
  std::vector<int> bad_n;
  for (std::size_t r = 0; r < t; ++r) {
    (r < n_good ? good_n : bad_n).push_back(trials[order[r]].params.n);
  }
  const SmoothedCategorical good_cat(good_n, space.n.low, space.n.high,
                                     config.prior_weight);
  const SmoothedCategorical bad_cat(bad_n, space.n.low, space.n.high,
                                    config.prior_weight);

  HLeporParams best;
  double best_score = -std::numeric_limits<double>::infinity();
  for (int c = 0; c < config.n_candidates; ++c) {
    // Same coordinate order as SampleUniform.
    HLeporParams x;
    x.alpha = real_models[0].good.Sample(rng);
    x.beta = real_models[1].good.Sample(rng);
    x.n = good_cat.Sample(rng);
    x.weight_elp = real_models[2].good.Sample(rng);
    x.weight_pos = real_models[3].good.Sample(rng);
    x.weight_pr = real_models[4].good.Sample(rng);

    double score = good_cat.LogProbability(x.n) - bad_cat.LogProbability(x.n);
    for (std::size_t d = 0; d < kRealDimensions.size(); ++d) {
      const double v = x.*kRealDimensions[d].field;
      score += real_models[d].good.LogDensity(v) -
               real_models[d].bad.LogDensity(v);
    }
    if (c == 0 || score > best_score) {
      best = x;
      best_score = score;
    }
  }
  return best;
}

}  // namespace

void ValidateTpeConfig(const TpeConfig& config) {
  if (config.budget < 1) {
    throw UsageError("budget must be >= 1, got " + std::to_string(config.budget));
  }
  if (config.n_startup < 0) {
    throw UsageError("n_startup must be >= 0, got " +
                     std::to_string(config.n_startup));
  }
  if (!(config.gamma > 0.0 && config.gamma < 1.0)) {
    throw UsageError("gamma must lie in (0, 1), got " + FormatReal(config.gamma));
  }
  if (config.n_candidates < 1) {
    throw UsageError("n_candidates must be >= 1, got " +
                     std::to_string(config.n_candidates));
  }
  if (!std::isfinite(config.prior_weight) || !(config.prior_weight > 0.0)) {
    throw UsageError("prior_weight must be > 0, got " +
                     FormatReal(config.prior_weight));
  }
}

TuneResult TuneRandom(const ObjectiveFn& objective, const SearchSpace& space,
                      int budget, std::uint64_t seed,
                      const TuneOptions& options) {
  ValidateSpace(space);
  if (budget < 1) {
    throw UsageError("budget must be >= 1, got " + std::to_string(budget));
  }
  Rng rng(seed);
  std::vector<HLeporParams> draws;
  draws.reserve(static_cast<std::size_t>(budget));
  for (int i = 0; i < budget; ++i) draws.push_back(SampleUniform(space, rng));

  TuneResult result;
  result.trials.resize(draws.size());
  const std::size_t workers = std::clamp<std::size_t>(options.threads, 1, draws.size());
  if (workers == 1) {
    for (std::size_t i = 0; i < draws.size(); ++i) {
      result.trials[i] = Evaluate(objective, draws[i], i, options.record_timing);
    }
  } else {
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (std::size_t i = w; i < draws.size(); i += workers) {
              result.trials[i] =
                  Evaluate(objective, draws[i], i, options.record_timing);
            }
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  result.best = BestOf(result.trials);
  return result;
}

TuneResult TuneTpe(const ObjectiveFn& objective, const SearchSpace& space,
                   const TpeConfig& config, const TuneOptions& options) {
  ValidateSpace(space);
  ValidateTpeConfig(config);
  Rng rng(config.seed);
  TuneResult result;
  result.trials.reserve(static_cast<std::size_t>(config.budget));
  for (int i = 0; i < config.budget; ++i) {
    const bool warmup = i < config.n_startup || result.trials.empty();
    const HLeporParams next = warmup
                                  ? SampleUniform(space, rng)
                                  : ProposeTpe(result.trials, space, config, rng);
    result.trials.push_back(Evaluate(objective, next,
                                     static_cast<std::size_t>(i),
                                     options.record_timing));
  }
  result.best = BestOf(result.trials);
  return result;
}

std::string FormatTrialLog(const std::vector<Trial>& trials) {
  std::string out;
  for (const Trial& t : trials) {
    ordered_json line;
    line["index"] = t.index;
    line["params"] = {{"alpha", t.params.alpha},
                      {"beta", t.params.beta},
                      {"n", t.params.n},
                      {"weight_elp", t.params.weight_elp},
                      {"weight_pos", t.params.weight_pos},
                      {"weight_pr", t.params.weight_pr}};
    line["objective"] = t.objective;
    line["wall_time"] = t.wall_time ? ordered_json(*t.wall_time) : ordered_json();
    out += line.dump();
    out += '\n';
  }
  return out;
}

std::vector<Trial> ParseTrialLog(std::string_view text) {
  std::vector<Trial> trials;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = Trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty()) continue;
    try {
      const auto j = ordered_json::parse(line);
      Trial t;
      t.index = j.at("index").get<std::size_t>();
      const auto& p = j.at("params");
      t.params.alpha = p.at("alpha").get<double>();
      t.params.beta = p.at("beta").get<double>();
      t.params.n = p.at("n").get<int>();
      t.params.weight_elp = p.at("weight_elp").get<double>();
      t.params.weight_pos = p.at("weight_pos").get<double>();
      t.params.weight_pr = p.at("weight_pr").get<double>();
      t.objective = j.at("objective").get<double>();
      if (!j.at("wall_time").is_null()) {
        t.wall_time = j.at("wall_time").get<double>();
      }
      trials.push_back(t);
    } catch (const nlohmann::json::exception& e) {
      throw DataError("trial log line " + std::to_string(line_no) + ": " +
                      e.what());
    }
  }
  return trials;
}

void WriteTrialLog(const std::vector<Trial>& trials,
                   const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << FormatTrialLog(trials)) || !out.flush()) {
    throw IoError("cannot write trial log '" + path.string() + "'");
  }
}

}  // namespace cushlepor
