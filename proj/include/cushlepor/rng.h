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

#ifndef CUSHLEPOR_RNG_H_
#define CUSHLEPOR_RNG_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>

namespace cushlepor {

// Seeded generator whose derived draws are fully specified here rather than
// by the standard library's (implementation-defined) distributions, so a
// seed reproduces the same sequence on every toolchain.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }

  // [0, 1) with 53 random mantissa bits.
  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // [low, high)
  double Uniform(double low, double high) {
    return low + (high - low) * Uniform();
  }

  // Integer in [low, high].
  int UniformInt(int low, int high);

  // Standard normal via Box-Muller (one output per call).
  double Normal();

  // Index drawn proportionally to non-negative `weights` (not all zero).
  std::size_t Categorical(std::span<const double> weights);

 private:
  std::mt19937_64 engine_;
};

}  // namespace cushlepor

#endif  // CUSHLEPOR_RNG_H_
