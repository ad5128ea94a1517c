// Copyright 2026 The hardedge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <utility>
#include <vector>

namespace hardedge {

struct RateFit {
  double slope = 0;
  double intercept = 0;
  double residual = 0;  // rms of ln error about the line
  double slope_stderr = 0;
};

// Least squares of ln(error) against ln(N). Needs >= 3 points with N > 0,
// error > 0 and at least two distinct N; throws InvalidInput otherwise.
RateFit rate_fit(const std::vector<std::pair<double, double>>& points);

}  // namespace hardedge
