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

#include "hardedge/micro.hpp"
#include "hardedge/spectral.hpp"

namespace hardedge::testing {

// a = 1, b = 3, T = 1, nu = 1, alpha = 1/2.
struct TestConfig {
  ScopedDigits digits{40};
  CriticalPotential cp = build_critical_potential(Real(1), Real(3), Real(1), 1);
  ConformalFrame fr = conformal_frame(cp);
  MicroModel mm = micro_model(Real(1) / 2, 1, {}, 5);
};

inline double to_double(const Real& x) { return x.convert_to<double>(); }

}  // namespace hardedge::testing
