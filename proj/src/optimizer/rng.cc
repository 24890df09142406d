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

#include "cushlepor/rng.h"

#include <cmath>
#include <numbers>

namespace cushlepor {

int Rng::UniformInt(int low, int high) {
  const auto span = static_cast<std::uint64_t>(high - low) + 1;
  const auto offset = static_cast<std::uint64_t>(
      std::floor(Uniform() * static_cast<double>(span)));
  return low + static_cast<int>(offset < span ? offset : span - 1);
}

double Rng::Normal() {
  // 1 - Uniform() lies in (0, 1], so the log is finite.
  const double u1 = 1.0 - Uniform();
  const double u2 = Uniform();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

std::size_t Rng::Categorical(std::span<const double> weights) {
  double total = 0.0;
  for (const double w : weights) total += w;
  const double target = Uniform() * total;
  double acc = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    acc += weights[i];
    if (target < acc) return i;
  }
  // Rounding can leave target == total; return the last positive weight.
  for (std::size_t i = weights.size(); i > 0; --i) {
    if (weights[i - 1] > 0.0) return i - 1;
  }
  return 0;
}

}  // namespace cushlepor
