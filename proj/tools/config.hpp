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

#include <string>
#include <vector>

#include "hardedge/numeric.hpp"
#include "json.hpp"

namespace hardedge::cli {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct ExperimentConfig {
  // spectral
  Real a, b, T;
  int nu = 1;
  std::vector<int> profile_nus;
  // micro
  Real alpha;
  std::vector<Real> f;
  // regime
  Real kappa;
  int r = 0;
  std::vector<Real> kappas;
  // numerics
  unsigned digits = 40;
  std::vector<int> n_grid;
  std::vector<double> parametrix_n_grid;
  int depth = 1;
  int sweep_n = 64;
  std::string disk_policy = "starlike";
  // output
  std::string directory = ".";
  std::vector<std::string> formats;

  json resolved;  // every field after defaults and overrides
};

// Defaults: a = 1, b = 3, T = 1, nu = 1, alpha = 1/2, kappa = 5/4, r = 0.
ExperimentConfig load_config(const std::string& path);

struct Overrides {
  std::string out;
  unsigned digits = 0;
  std::string n_grid;
  int depth = 0;
  bool long_grid = false;
};

// Applies command-line overrides, validates, and refreshes `resolved`.
void finalize_config(ExperimentConfig& cfg, const Overrides& ov);

bool wants(const ExperimentConfig& cfg, const std::string& format);

}  // namespace hardedge::cli
