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

#include <gtest/gtest.h>

#include <cmath>

#include "hardedge/numeric.hpp"
#include "hardedge/rate_fit.hpp"

namespace hardedge {
namespace {

TEST(RateFit, ExactPowerLaw) {
  std::vector<std::pair<double, double>> pts;
  for (double N : {16.0, 32.0, 64.0, 128.0}) pts.emplace_back(N, 1.0 / N);
  RateFit f = rate_fit(pts);
  EXPECT_NEAR(f.slope, -1.0, 1e-12);
  EXPECT_NEAR(f.intercept, 0.0, 1e-12);
  EXPECT_LT(f.residual, 1e-12);
}

TEST(RateFit, PowerLawWithCorrection) {
  std::vector<std::pair<double, double>> pts;
  for (double N : {16.0, 32.0, 64.0, 128.0}) {
    pts.emplace_back(N, 3 * std::pow(N, -1.5) * (1 + 0.2 / std::sqrt(N)));
  }
  RateFit f = rate_fit(pts);
  EXPECT_GT(f.slope, -1.6);
  EXPECT_LT(f.slope, -1.4);
}

TEST(RateFit, RejectsBadInput) {
  EXPECT_THROW(rate_fit({{10.0, 1.0}}), InvalidInput);
  EXPECT_THROW(rate_fit({{10.0, 1.0}, {20.0, 0.0}, {30.0, 1.0}}), InvalidInput);
  EXPECT_THROW(rate_fit({{10.0, 1.0}, {10.0, 2.0}, {10.0, 3.0}}), InvalidInput);
}

}  // namespace
}  // namespace hardedge
