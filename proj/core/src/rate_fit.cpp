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

#include "hardedge/rate_fit.hpp"

#include <cmath>

#include "hardedge/numeric.hpp"

namespace hardedge {

RateFit rate_fit(const std::vector<std::pair<double, double>>& points) {
  const std::size_t m = points.size();
  if (m < 3) throw InvalidInput("rate_fit: need at least 3 points");
  double sx = 0, sy = 0;
  for (const auto& [N, e] : points) {
    if (!(N > 0) || !(e > 0) || !std::isfinite(e)) {
      throw InvalidInput("rate_fit: N and error must be positive and finite");
    }
    sx += std::log(N);
    sy += std::log(e);
  }
  const double mx = sx / m, my = sy / m;
  double sxx = 0, sxy = 0;
  for (const auto& [N, e] : points) {
    const double dx = std::log(N) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(e) - my);
  }
  if (sxx == 0) throw InvalidInput("rate_fit: need two distinct N");
  RateFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss = 0;
  for (const auto& [N, e] : points) {
    const double d = std::log(e) - fit.intercept - fit.slope * std::log(N);
    ss += d * d;
  }
  fit.residual = std::sqrt(ss / m);
  fit.slope_stderr = m > 2 ? std::sqrt(ss / (m - 2) / sxx) : 0.0;
  return fit;
}

}  // namespace hardedge
