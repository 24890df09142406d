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

#ifndef CUSHLEPOR_PARAMS_H_
#define CUSHLEPOR_PARAMS_H_

#include <string>

namespace cushlepor {

inline constexpr int kMinWindow = 1;
inline constexpr int kMaxWindow = 10;

// One point in the six-dimensional hLEPOR parameter space.
struct HLeporParams {
  double alpha = 9.0;  // recall weight inside HPR
  double beta = 1.0;   // precision weight inside HPR
  int n = 2;           // context radius used to disambiguate word matches
  double weight_elp = 3.0;
  double weight_pos = 7.0;
  double weight_pr = 1.0;

  bool operator==(const HLeporParams&) const = default;
};

// Throws UsageError unless every weight is finite and strictly positive and
// n lies in [kMinWindow, kMaxWindow].
void ValidateParams(const HLeporParams& params);

// "(alpha=9, beta=1, n=2, weight_elp=3, weight_pos=7, weight_pr=1)"
std::string ToString(const HLeporParams& params);

}  // namespace cushlepor

#endif  // CUSHLEPOR_PARAMS_H_
