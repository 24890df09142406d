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

#ifndef CUSHLEPOR_SEARCH_SPACE_H_
#define CUSHLEPOR_SEARCH_SPACE_H_

#include <array>
#include <string_view>

#include "cushlepor/params.h"
#include "cushlepor/rng.h"

namespace cushlepor {

struct RealRange {
  double low = 1.0;
  double high = 15.0;
};

struct IntRange {
  int low = 1;
  int high = 4;
};

struct SearchSpace {
  RealRange alpha;
  RealRange beta;
  IntRange n;
  RealRange weight_elp;
  RealRange weight_pos;
  RealRange weight_pr;
};

// The five real-valued coordinates, in sampling order.
struct RealDimension {
  std::string_view name;
  double HLeporParams::*field;
  RealRange SearchSpace::*range;
};

inline constexpr std::array<RealDimension, 5> kRealDimensions = {{
    {"alpha", &HLeporParams::alpha, &SearchSpace::alpha},
    {"beta", &HLeporParams::beta, &SearchSpace::beta},
    {"weight_elp", &HLeporParams::weight_elp, &SearchSpace::weight_elp},
    {"weight_pos", &HLeporParams::weight_pos, &SearchSpace::weight_pos},
    {"weight_pr", &HLeporParams::weight_pr, &SearchSpace::weight_pr},
}};

// Throws UsageError unless every real range has 0 < low < high and the
// integer range is a non-empty subset of the valid window sizes.
void ValidateSpace(const SearchSpace& space);

bool Contains(const SearchSpace& space, const HLeporParams& params);

// One uniform draw. Consumes the generator in a fixed order: alpha, beta,
// n, weight_elp, weight_pos, weight_pr.
HLeporParams SampleUniform(const SearchSpace& space, Rng& rng);

}  // namespace cushlepor

#endif  // CUSHLEPOR_SEARCH_SPACE_H_
