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

#include <benchmark/benchmark.h>

#include "hardedge/micro.hpp"
#include "hardedge/oracle.hpp"
#include "hardedge/parametrix.hpp"
#include "hardedge/spectral.hpp"

namespace {

using namespace hardedge;

// a = 1, b = 3, T = 1, nu = 1, alpha = 1/2 at 40 digits.
struct Setup {
  ScopedDigits digits{40};
  CriticalPotential cp = build_critical_potential(Real(1), Real(3), Real(1), 1);
  ConformalFrame fr = conformal_frame(cp);
  MicroModel mm = micro_model(Real(1) / 2, 1, {}, 4);
};

Setup& setup() {
  static Setup s;
  return s;
}

void BM_OuterSeries(benchmark::State& state) {
  Setup& s = setup();
  const int K = static_cast<int>(state.range(0));
  for (auto _ : state) {
    OuterSeries os = outer_series(s.fr, s.mm.alpha, K, 0, 4);
    benchmark::DoNotOptimize(os.phi.data());
  }
}
BENCHMARK(BM_OuterSeries)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_BoundaryResidual(benchmark::State& state) {
  Setup& s = setup();
  ParametrixSet set = build_parametrix(s.fr, s.mm, Real(5) / 4, Real(1000), 0);
  const int samples = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Real r = boundary_residual(set, s.mm, samples);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_BoundaryResidual)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_FiniteNOps(benchmark::State& state) {
  Setup& s = setup();
  PerturbationWindow win = make_window(s.fr, Real(5) / 4, s.mm.alpha, {});
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) {
    OracleRun run = finite_n_ops(s.fr, win, N, 0);
    benchmark::DoNotOptimize(run.zeros_all.data());
  }
}
BENCHMARK(BM_FiniteNOps)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
