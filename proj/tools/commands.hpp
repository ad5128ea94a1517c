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

#include "config.hpp"

namespace hardedge::cli {

struct CommandFlags {
  bool synthetic = false;    // compare: planted-rate self-test, no oracle
  bool with_oracle = false;  // sweep-kappa: oracle column at numerics.sweep_n
};

void cmd_potential(const ExperimentConfig& cfg);
void cmd_predict(const ExperimentConfig& cfg);
void cmd_oracle(const ExperimentConfig& cfg);
void cmd_compare(const ExperimentConfig& cfg, const CommandFlags& flags);
void cmd_sweep_kappa(const ExperimentConfig& cfg, const CommandFlags& flags);
void cmd_schlesinger_depth(const ExperimentConfig& cfg);

}  // namespace hardedge::cli
