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

#include "cushlepor/stats.h"

#include <algorithm>
#include <cmath>

#include "cushlepor/errors.h"
#include "cushlepor/kv_file.h"

namespace cushlepor {

double Rmse(std::span<const double> metric, std::span<const double> gold) {
  if (metric.size() != gold.size()) {
    throw StatisticsError("rmse: length mismatch (" +
                          std::to_string(metric.size()) + " vs " +
                          std::to_string(gold.size()) + ")");
  }
  if (metric.empty()) throw StatisticsError("rmse: empty input");
  double sum = 0.0;
  for (std::size_t i = 0; i < metric.size(); ++i) {
    const double d = metric[i] - gold[i];
    sum += d * d;
  }
  return std::sqrt(sum / static_cast<double>(metric.size()));
}

double Pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw StatisticsError("pearson: length mismatch (" +
                          std::to_string(x.size()) + " vs " +
                          std::to_string(y.size()) + ")");
  }
  if (x.size() < 2) throw StatisticsError("pearson: need at least 2 points");
  const auto n = static_cast<double>(x.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mean_x += x[i];
    mean_y += y[i];
  }
  mean_x /= n;
  mean_y /= n;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mean_x;
    const double dy = y[i] - mean_y;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw StatisticsError("pearson: undefined correlation (zero variance)");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

void ValidateScale(const GoldScale& scale) {
  if (!std::isfinite(scale.min) || !std::isfinite(scale.max) ||
      !(scale.max > scale.min)) {
    throw UsageError("gold scale '" + scale.name +
                     "' needs finite min < max (use ':inverted' for "
                     "lower-is-better scores)");
  }
}

GoldScale ParseGoldScale(std::string_view spec) {
  if (spec == "psqm") return kPsqmScale;
  if (spec == "unit") return kUnitScale;
  if (spec == "mqm") return kMqmScale;

  GoldScale scale;
  scale.name = std::string(spec);
  std::string_view rest = spec;
  const auto first = rest.find(':');
  if (first == std::string_view::npos) {
    throw UsageError("unknown gold scale '" + std::string(spec) +
                     "'; expected psqm, unit, mqm or LOW:HIGH[:inverted]");
  }
  const std::string_view low = rest.substr(0, first);
  rest.remove_prefix(first + 1);
  const auto second = rest.find(':');
  const std::string_view high = rest.substr(0, second);
  if (second != std::string_view::npos) {
    if (rest.substr(second + 1) != "inverted") {
      throw UsageError("gold scale '" + std::string(spec) +
                       "': only ':inverted' may follow LOW:HIGH");
    }
    scale.inverted = true;
  }
  try {
    scale.min = ParseReal(low, "gold scale low");
    scale.max = ParseReal(high, "gold scale high");
  } catch (const DataError& e) {
    throw UsageError(e.what());
  }
  ValidateScale(scale);
  return scale;
}

std::string ToString(const GoldScale& scale) {
  return scale.name + " [" + FormatReal(scale.min) + ", " +
         FormatReal(scale.max) + "]" + (scale.inverted ? " inverted" : "");
}

double NormalizeGold(double value, const GoldScale& scale,
                     std::size_t* clamped) {
  double unit = (value - scale.min) / (scale.max - scale.min);
  if (unit < 0.0 || unit > 1.0) {
    if (clamped != nullptr) ++*clamped;
    unit = std::clamp(unit, 0.0, 1.0);
  }
  return scale.inverted ? 1.0 - unit : unit;
}

std::size_t HistogramBin(double value) {
  if (!(value > 0.0)) return 0;
  if (value >= 1.0) return kHistogramBins - 1;
  const auto bin =
      static_cast<std::size_t>(std::floor(value * static_cast<double>(kHistogramBins)));
  return std::min(bin, kHistogramBins - 1);
}

Histogram BuildHistogram(std::span<const double> values) {
  Histogram counts{};
  for (const double v : values) ++counts[HistogramBin(v)];
  return counts;
}

}  // namespace cushlepor
