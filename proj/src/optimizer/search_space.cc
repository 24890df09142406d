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

#include "cushlepor/search_space.h"

#include <cmath>
#include <string>

#include "cushlepor/errors.h"
#include "cushlepor/kv_file.h"

namespace cushlepor {

void ValidateSpace(const SearchSpace& space) {
  for (const RealDimension& dim : kRealDimensions) {
    const RealRange& r = space.*dim.range;
    if (!std::isfinite(r.low) || !std::isfinite(r.high) || !(r.low > 0.0) ||
        !(r.low < r.high)) {
      throw UsageError("search space: " + std::string(dim.name) +
                       " needs 0 < low < high, got [" + FormatReal(r.low) +
                       ", " + FormatReal(r.high) + "]");
    }
  }
  if (space.n.low > space.n.high || space.n.low < kMinWindow ||
      space.n.high > kMaxWindow) {
    throw UsageError("search space: n needs " + std::to_string(kMinWindow) +
                     " <= low <= high <= " + std::to_string(kMaxWindow) +
                     ", got {" + std::to_string(space.n.low) + ".." +
                     std::to_string(space.n.high) + "}");
  }
}

bool Contains(const SearchSpace& space, const HLeporParams& params) {
  for (const RealDimension& dim : kRealDimensions) {
    const RealRange& r = space.*dim.range;
    const double v = params.*dim.field;
    if (!(v >= r.low && v <= r.high)) return false;
  }
  return params.n >= space.n.low && params.n <= space.n.high;
}

HLeporParams SampleUniform(const SearchSpace& space, Rng& rng) {
  HLeporParams p;
  p.alpha = rng.Uniform(space.alpha.low, space.alpha.high);
  p.beta = rng.Uniform(space.beta.low, space.beta.high);
  p.n = rng.UniformInt(space.n.low, space.n.high);
  p.weight_elp = rng.Uniform(space.weight_elp.low, space.weight_elp.high);
  p.weight_pos = rng.Uniform(space.weight_pos.low, space.weight_pos.high);
  p.weight_pr = rng.Uniform(space.weight_pr.low, space.weight_pr.high);
  return p;
}

}  // namespace cushlepor
