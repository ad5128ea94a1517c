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

// hardedge: command-line runner for hard-edge colonization experiments.
// Exit codes: 0 success, 1 numerical failure, 2 invalid input.

#include <cstdio>
#include <exception>
#include <functional>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "config.hpp"
#include "hardedge/version.hpp"

int main(int argc, char** argv) {
  using namespace hardedge;
  using namespace hardedge::cli;

  CLI::App app{"Hard-edge colonization: parametrices, predictions and finite-N oracle"};
  app.set_version_flag("--version", std::string("hardedge ") + kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  Overrides ov;
  CommandFlags flags;
  app.add_option("--config", config_path, "JSON experiment config (defaults apply when omitted)")
      ->check(CLI::ExistingFile);
  app.add_option("--out", ov.out, "output directory (overrides output.directory)");
  app.add_option("--digits", ov.digits, "working precision in decimal digits");
  app.add_option("--n-grid", ov.n_grid, "comma-separated N values, e.g. 16,32,64");
  app.add_option("--depth", ov.depth, "Schlesinger depth p (1..6)");
  app.add_flag("--long", ov.long_grid, "append N = 256 to the oracle grid");

  std::function<void(const ExperimentConfig&)> action;
  auto sub = [&](const char* name, const char* help, std::function<void(const ExperimentConfig&)> f) {
    CLI::App* s = app.add_subcommand(name, help);
    s->callback([&action, f] { action = f; });
    return s;
  };
  sub("potential", "emit (x, V, phi, rho) profiles as CSV", cmd_potential);
  sub("predict", "zero, kernel and certificate predictions (JSON)", cmd_predict);
  sub("oracle", "finite-N orthogonal polynomial runs over the N grid", cmd_oracle);
  sub("compare", "oracle vs prediction errors, rate fits and pass/fail",
      [&flags](const ExperimentConfig& c) { cmd_compare(c, flags); })
      ->add_flag("--synthetic", flags.synthetic, "planted-rate self-test without the oracle");
  sub("sweep-kappa", "edge-zero population across the kappa list",
      [&flags](const ExperimentConfig& c) { cmd_sweep_kappa(c, flags); })
      ->add_flag("--with-oracle", flags.with_oracle, "add oracle counts at numerics.sweep_n");
  sub("schlesinger-depth", "improved parametrix residuals for depth 1..p",
      cmd_schlesinger_depth);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    ExperimentConfig cfg = load_config(config_path);
    finalize_config(cfg, ov);
    ScopedDigits digits(cfg.digits);
    action(cfg);
  } catch (const InvalidInput& e) {
    std::fprintf(stderr, "invalid input: %s\n", e.what());
    return 2;
  } catch (const NumericalFailure& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
