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

#include <vector>

#include "hardedge/spectral.hpp"

namespace hardedge {

// The weight x^alpha exp(-(N/T) V) is multiplied on J = [0, eps) by
// N^((2 kappa + alpha) gamma) Ctilde0^(alpha gamma) exp(alpha eta(x) - f(zeta(x))).
struct PerturbationWindow {
  Real eps;
  Real kappa;
  Real alpha;
  std::vector<Real> f;  // f(zeta) = sum_k f[k] zeta^k
};

// eps = disk radius. Throws InvalidInput for alpha <= -1 or deg f >= nu.
PerturbationWindow make_window(const ConformalFrame& fr, const Real& kappa, const Real& alpha,
                               const std::vector<Real>& f);

// ln w(x), x > 0.
Real perturbed_weight(const ConformalFrame& fr, const PerturbationWindow& win, const Real& N,
                      const Real& x);

struct OracleOptions {
  unsigned digits = 0;        // 0 selects the precision policy
  double quad_density = 1.0;  // scales every panel count and order
  double weight_scale = 1.0;  // constant multiplying the weight (rescaling check)
};

// digits = 30 + ceil(0.8 N max_{[0,a]} phi / (T ln 10)).
unsigned oracle_digits(const ConformalFrame& fr, const Real& N);

struct OracleRun {
  ConformalFrame frame;
  PerturbationWindow window;
  Real N;
  int r = 0;
  int n = 0;  // N + r
  unsigned digits = 0;
  int escalations = 0;
  std::size_t quadrature_nodes = 0;
  Real log_weight_scale;  // ln of OracleOptions::weight_scale
  // p_{k+1} = (x - rec_a[k]) p_k - rec_b[k] p_{k-1}, k = 0..n-1 (rec_b[0] = 0).
  std::vector<Real> rec_a, rec_b;
  std::vector<Real> log_h;  // ln h_k, k = 0..n
  std::vector<Real> zeros_all;            // zeros of p_n, ascending
  std::vector<Real> zeros_edge_rescaled;  // (Ctilde0 N)^gamma ztilde(x) for zeros with x < eps
  double seconds = 0;
};

// Monic p_0..p_n by the discretized Stieltjes procedure. N must be a
// positive integer and n = N + r >= 1. Throws NumericalFailure when a norm
// or recurrence coefficient loses positivity after one precision escalation.
OracleRun finite_n_ops(const ConformalFrame& fr, const PerturbationWindow& win, int N, int r,
                       const OracleOptions& opt = {});

// (p_{n-1}(x), p_n(x)) and their x-derivatives at the run's precision.
struct PolyPair {
  Real pm1, pn, dpm1, dpn;
};
PolyPair oracle_poly_pair(const OracleRun& run, const Real& x);

// sqrt(w(x) w(x')) K_n(x, x') sqrt(x'(zeta) x'(zeta')), both points in J.
Real oracle_dressed_kernel(const OracleRun& run, const Real& zeta, const Real& zetap);

}  // namespace hardedge
