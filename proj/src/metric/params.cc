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

#include "cushlepor/params.h"

#include <cmath>

#include "cushlepor/errors.h"
#include "cushlepor/kv_file.h"

namespace cushlepor {
namespace {

void RequirePositive(double value, const char* name) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw UsageError(std::string("parameter ") + name +
                     " must be finite and > 0, got " + FormatReal(value));
  }
}

}  // namespace

void ValidateParams(const HLeporParams& params) {
  RequirePositive(params.alpha, "alpha");
  RequirePositive(params.beta, "beta");
  RequirePositive(params.weight_elp, "weight_elp");
  RequirePositive(params.weight_pos, "weight_pos");
  RequirePositive(params.weight_pr, "weight_pr");
  if (params.n < kMinWindow || params.n > kMaxWindow) {
    throw UsageError("parameter n must be in [" + std::to_string(kMinWindow) +
                     ", " + std::to_string(kMaxWindow) + "], got " +
                     std::to_string(params.n));
  }
}

std::string ToString(const HLeporParams& params) {
  return "(alpha=" + FormatReal(params.alpha) +
         ", beta=" + FormatReal(params.beta) +
         ", n=" + std::to_string(params.n) +
         ", weight_elp=" + FormatReal(params.weight_elp) +
         ", weight_pos=" + FormatReal(params.weight_pos) +
         ", weight_pr=" + FormatReal(params.weight_pr) + ")";
}

}  // namespace cushlepor
