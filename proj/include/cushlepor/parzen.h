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

// One-dimensional densities used by the tree-structured Parzen estimator.

#ifndef CUSHLEPOR_PARZEN_H_
#define CUSHLEPOR_PARZEN_H_

#include <span>
#include <vector>

#include "cushlepor/rng.h"

namespace cushlepor {

// Mixture over [low, high] of one truncated Gaussian per observation (weight
// 1 each) and a uniform prior component (weight prior_weight).
//
// Bandwidths are adaptive: with the observations sorted, each kernel's sigma
// is the larger of the gaps to its two neighbours, where the bounds stand in
// for a missing neighbour. Sigma is then clamped to [1%, 100%] of the range.
class TruncatedParzen {
 public:
  TruncatedParzen(std::span<const double> observations, double low,
                  double high, double prior_weight);

  double Density(double x) const;
  double LogDensity(double x) const;
  double Sample(Rng& rng) const;

  // Sorted kernel centres and matching bandwidths.
  const std::vector<double>& centers() const { return centers_; }
  const std::vector<double>& bandwidths() const { return sigmas_; }

 private:
  double low_;
  double high_;
  double prior_weight_;
  std::vector<double> centers_;
  std::vector<double> sigmas_;
  std::vector<double> mass_;     // Phi(b) - Phi(a) of each kernel
  std::vector<double> weights_;  // kernels then prior, unnormalized
  double total_weight_ = 0.0;
};

// Categorical over {low..high}: observed counts plus prior_weight spread
// evenly over the categories.
class SmoothedCategorical {
 public:
  SmoothedCategorical(std::span<const int> observations, int low, int high,
                      double prior_weight);

  double Probability(int value) const;
  double LogProbability(int value) const;
  int Sample(Rng& rng) const;

 private:
  int low_;
  std::vector<double> weights_;
  double total_ = 0.0;
};

}  // namespace cushlepor

#endif  // CUSHLEPOR_PARZEN_H_
