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

#ifndef CUSHLEPOR_STATS_H_
#define CUSHLEPOR_STATS_H_

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>

namespace cushlepor {

// Root mean squared difference. Throws StatisticsError for empty or
// mismatched inputs.
double Rmse(std::span<const double> metric, std::span<const double> gold);

// Sample Pearson correlation. Throws StatisticsError for fewer than two
// points, mismatched lengths, or a constant sequence.
double Pearson(std::span<const double> x, std::span<const double> y);

// Affine map of a gold score range onto [0, 1]. With `inverted` set the map
// is reversed, for penalty-style scores where lower is better.
struct GoldScale {
  std::string name;
  double min = 0.0;
  double max = 1.0;
  bool inverted = false;

  bool operator==(const GoldScale&) const = default;
};

inline const GoldScale kPsqmScale{"psqm", 0.0, 6.0, false};
inline const GoldScale kUnitScale{"unit", 0.0, 1.0, false};
inline const GoldScale kMqmScale{"mqm", 0.0, 25.0, true};

// Throws UsageError unless min < max and both are finite.
void ValidateScale(const GoldScale& scale);

// "psqm", "unit", "mqm", "LOW:HIGH" or "LOW:HIGH:inverted".
GoldScale ParseGoldScale(std::string_view spec);
std::string ToString(const GoldScale& scale);

// clamp((value - min) / (max - min), 0, 1), mirrored when inverted. Each
// out-of-range input increments *clamped when provided.
double NormalizeGold(double value, const GoldScale& scale,
                     std::size_t* clamped = nullptr);

inline constexpr std::size_t kHistogramBins = 20;
using Histogram = std::array<std::size_t, kHistogramBins>;

// Fixed-width bins over [0, 1]: left-closed, right-open, last bin closed.
// Values outside [0, 1] are clamped into the end bins.
std::size_t HistogramBin(double value);
Histogram BuildHistogram(std::span<const double> values);

}  // namespace cushlepor

#endif  // CUSHLEPOR_STATS_H_
