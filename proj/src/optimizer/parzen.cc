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

#include "cushlepor/parzen.h"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cushlepor {
namespace {

constexpr double kMinBandwidthFraction = 0.01;

double NormalCdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

double NormalPdf(double z) {
  return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
}

}  // namespace

TruncatedParzen::TruncatedParzen(std::span<const double> observations,
                                 double low, double high, double prior_weight)
    : low_(low), high_(high), prior_weight_(prior_weight) {
  centers_.assign(observations.begin(), observations.end());
  std::sort(centers_.begin(), centers_.end());

  const double range = high_ - low_;
  const std::size_t n = centers_.size();
  sigmas_.resize(n);
  mass_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double left = i > 0 ? centers_[i] - centers_[i - 1] : centers_[i] - low_;
    const double right =
        i + 1 < n ? centers_[i + 1] - centers_[i] : high_ - centers_[i];
    sigmas_[i] =
        std::clamp(std::max(left, right), kMinBandwidthFraction * range, range);
    mass_[i] = NormalCdf((high_ - centers_[i]) / sigmas_[i]) -
               NormalCdf((low_ - centers_[i]) / sigmas_[i]);
  }

  weights_.assign(n, 1.0);
  weights_.push_back(prior_weight_);
  total_weight_ = static_cast<double>(n) + prior_weight_;
}

double TruncatedParzen::Density(double x) const {
  if (x < low_ || x > high_) return 0.0;
  double sum = prior_weight_ / (high_ - low_);
  for (std::size_t i = 0; i < centers_.size(); ++i) {
    const double z = (x - centers_[i]) / sigmas_[i];
    sum += NormalPdf(z) / (sigmas_[i] * mass_[i]);
  }
  return sum / total_weight_;
}

double TruncatedParzen::LogDensity(double x) const {
  return std::log(Density(x));
}

double TruncatedParzen::Sample(Rng& rng) const {
  const std::size_t k = rng.Categorical(weights_);
  if (k == centers_.size()) return rng.Uniform(low_, high_);
  // Rejection from the untruncated kernel; sigma <= range keeps the
  // acceptance rate above ~1/3.
  while (true) {
    const double x = centers_[k] + sigmas_[k] * rng.Normal();
    if (x >= low_ && x <= high_) return x;
  }
}

SmoothedCategorical::SmoothedCategorical(std::span<const int> observations,
                                         int low, int high, double prior_weight)
    : low_(low) {
  const auto categories = static_cast<std::size_t>(high - low + 1);
  weights_.assign(categories,
                  prior_weight / static_cast<double>(categories));
  for (const int v : observations) {
    if (v >= low && v <= high) weights_[static_cast<std::size_t>(v - low)] += 1.0;
  }
  for (const double w : weights_) total_ += w;
}

double SmoothedCategorical::Probability(int value) const {
  if (value < low_ || value >= low_ + static_cast<int>(weights_.size())) {
    return 0.0;
  }
  return weights_[static_cast<std::size_t>(value - low_)] / total_;
}

double SmoothedCategorical::LogProbability(int value) const {
  return std::log(Probability(value));
}

int SmoothedCategorical::Sample(Rng& rng) const {
  return low_ + static_cast<int>(rng.Categorical(weights_));
}

}  // namespace cushlepor
