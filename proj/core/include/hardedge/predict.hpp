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

#include <optional>
#include <vector>

#include "hardedge/parametrix.hpp"

namespace hardedge {

// Location of the zero that leaves the hard edge when delta < 0.
struct StrayZero {
  Real ab_route;      // 2 pi i Ctilde0^{2 gamma K} B1 / (eta_{K-1} A1) N^{2 gamma |delta|}
  Real closed_form;   // same in terms of (a, b, t0, r, alpha, K, eta_{K-1})
  Real growth_exponent;
};

struct ZeroPrediction {
  Real kappa;
  int K = 0;
  Real delta;
  Real N;
  std::vector<Real> anchored_zeros;  // in zeta
  std::optional<StrayZero> stray;
  // Expected decay exponent of |measured - anchored|.
  Real convergence_exponent;
  // Coefficient lambda of P_K - lambda P_{K-1} when delta == 0.
  std::optional<Real> mixing_lambda;
};

// Closed-form leading Taylor data of Psi_K ztilde^{-K sigma3} at z = 0.
struct EdgeConstants {
  Real X;     // t0^2 / ((b-a)/4 (t0^2 - 1)^2)
  Real D0sq;  // D(0)^2 = (-t0 (b-a)/4)^alpha (1 - t0^-2)^(2 alpha)
};
EdgeConstants edge_constants(const ConformalFrame& fr, const Real& alpha);

// Throws DegenerateConfiguration when A^(0)_1 vanishes to working precision.
ZeroPrediction predicted_zeros(const ParametrixSet& set, const MicroModel& mm);

enum class KernelKind { generic, transitional_plus, transitional_minus };

struct KernelPrediction {
  KernelKind kind = KernelKind::generic;
  int K = 0;
  Real mixing;  // alpha_K (plus), beta_{K-1} (minus), 0 (generic)
};
KernelPrediction kernel_prediction(const ParametrixSet& set, const MicroModel& mm);

// m / (1 + m) with m = -Mt_12 det[A0, A1] (delta > 0) or -Mt_21 det[B1, B0]
// (delta < 0). Continuous in delta and equal to alpha_K, beta_{K-1} at |delta| = 1/2.
Complex mixing_coefficient(const ParametrixSet& set);

// CD part plus the mixing term of `kp`, in zeta; the confluent derivative
// form is used when zeta and zetap coincide to working precision.
Complex kernel_bracket(const MicroModel& mm, const KernelPrediction& kp, const Complex& zeta,
                       const Complex& zetap);
// sqrt(w_m(zeta) w_m(zetap)) times the bracket, w_m = zeta^alpha exp(-V_m): the
// dressed kernel per unit zeta.
Complex micro_dressed_kernel(const MicroModel& mm, const KernelPrediction& kp,
                             const Complex& zeta, const Complex& zetap);

struct KernelValue {
  bool dressed = true;
  Complex value;       // dressed only
  Real log_magnitude;  // ln |K|
  Real phase;          // arg K
};
// Dressed: (Ctilde0 N)^gamma sqrt(w_m w_m') [bracket], per unit x. Raw: the
// kernel of the monic polynomials in log form; requires real zeta, zetap
// inside the disk (the factor exp(2 pi i N Im g / T) is 1 for integer N and
// is dropped from the phase).
KernelValue predicted_kernel(const ParametrixSet& set, const MicroModel& mm, const Complex& zeta,
                             const Complex& zetap, bool dressed);

struct TransitionalCertificate {
  Real value;        // closed form
  Complex ab_route;  // u_K det[A0, A1] or l_{K-1} det[B1, B0] from the AB coefficients
  Real relative_gap;
  bool positive = false;
};
// Requires |delta| == 1/2 (and K >= 1 for delta = -1/2).
TransitionalCertificate transitional_certificate(const ParametrixSet& set, const MicroModel& mm);

}  // namespace hardedge
