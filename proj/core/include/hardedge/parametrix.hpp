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

#include "hardedge/matrix2.hpp"
#include "hardedge/micro.hpp"
#include "hardedge/spectral.hpp"

namespace hardedge {

// ---- Szego function -------------------------------------------------------

// D_inf = (-t0 (b-a)/4)^(alpha/2), so that D_+ D_- = x^alpha on (a, b).
Real szego_infinity(const ConformalFrame& fr, const Real& alpha);
// D(z) = D_inf (1 - 1/(t0 t))^alpha off the cut.
Complex szego(const ConformalFrame& fr, const Real& alpha, const Complex& z);
// Boundary value on (a, b) from above (+1) or below (-1).
Complex szego_boundary(const ConformalFrame& fr, const Real& alpha, const Real& x, int side);

// ---- Outer parametrix -----------------------------------------------------

// Radius of the excluded disks around a and b.
Real edge_exclusion_radius(const ConformalFrame& fr);

Matrix2 outer_psi(const ConformalFrame& fr, const Real& alpha, int K, int r, const Complex& z);
Matrix2 outer_psi_boundary(const ConformalFrame& fr, const Real& alpha, int K, int r,
                           const Real& x, int side);

// N-independent Taylor data at z = 0: coefficients of Psi_K ztilde^{-K sigma3}
// and of exp(-eta), by trapezoidal Cauchy integrals on a circle.
struct OuterSeries {
  int K = 0;
  int r = 0;
  Real alpha;
  Real radius;
  int nodes = 0;
  std::vector<Matrix2> phi;
  std::vector<Complex> exp_minus_eta;
};

OuterSeries outer_series(const ConformalFrame& fr, const Real& alpha, int K, int r, int jmax);

// ---- Regimes and the nilpotent correction ---------------------------------

// K = nearest integer to kappa (halves rounded away from zero) for kappa > 0,
// K = 0 for kappa <= 0.
int nearest_K(const Real& kappa);

// M_{K,delta}; zero for delta == 0. For K == 0 (0 < kappa < 1/2) only the
// delta > 0 form applies and reduces to the single upper entry.
Matrix2 nilpotent_M(const ConformalFrame& fr, const MicroModel& mm, int K, const Real& delta,
                    const Real& N);

// ---- Parametrix set -------------------------------------------------------

struct ParametrixSet {
  ConformalFrame frame;
  int K = 0;
  Real kappa;
  Real delta;
  Real N;
  int r = 0;
  Real alpha;
  // False drops M and F (plain z^{-K sigma3} H_K), used to exhibit the
  // non-decaying residual at half-integer kappa.
  bool corrected = true;
  Matrix2 M;    // M_{K,delta}
  Matrix2 Mt;   // M (Ctilde0 N)^{-gamma}
  Matrix2 F;    // F_{K,delta}
  std::vector<Matrix2> AB;  // [A^(j), B^(j)], j = 0..jmax
  Complex uK;
  Complex lKm1;
  OuterSeries series;
};

ParametrixSet build_parametrix(const ConformalFrame& fr, const MicroModel& mm,
                               const Real& kappa, const Real& N, int r, int jmax = 4,
                               bool corrected = true);
// Same with an explicit split kappa = K + delta (used at delta = +1/2, which
// the nearest-integer rule assigns to K + 1).
ParametrixSet build_parametrix_explicit(const ConformalFrame& fr, const MicroModel& mm, int K,
                                        const Real& delta, const Real& N, int r, int jmax = 4,
                                        bool corrected = true);
// Reuses N-independent Taylor data (must match K, r, alpha).
ParametrixSet build_parametrix_explicit(const ConformalFrame& fr, const MicroModel& mm, int K,
                                        const Real& delta, const Real& N, int r,
                                        const OuterSeries& series, bool corrected = true);

// [A^(j), B^(j)] from the cached series for a given Mt.
std::vector<Matrix2> ab_coefficients(const OuterSeries& series, const Matrix2& Mt, int jmax);

// F = AB0 Mt (AB0 - AB1 Mt)^{-1}; zero when Mt == 0.
Matrix2 schlesinger_F(const Matrix2& AB0, const Matrix2& AB1, const Matrix2& Mt);

// ---- Local parametrix -----------------------------------------------------

// H_K(zeta) = Lambda Y_m(zeta) N^{-kappa gamma sigma3}.
Matrix2 local_H(const ParametrixSet& set, const MicroModel& mm, const Complex& zeta);
Matrix2 local_H_boundary(const ParametrixSet& set, const MicroModel& mm, const Real& x,
                         int side);
// R_kappa(zeta) = ztilde^{-K sigma3} (1 - M/zeta) H_K(zeta), ztilde = zeta/(Ctilde0 N)^gamma.
Matrix2 local_R(const ParametrixSet& set, const MicroModel& mm, const Complex& zeta);
Matrix2 local_R_boundary(const ParametrixSet& set, const MicroModel& mm, const Real& x,
                         int side);

// Psi_kappa(z) = (1 + F/z) Psi_K(z).
Matrix2 outer_kappa(const ParametrixSet& set, const Complex& z);
// Psi_kappa outside the disk, Psi_kappa R_kappa(zeta(z)) inside.
Matrix2 assemble(const ParametrixSet& set, const MicroModel& mm, const Complex& z);

// max over 128 points z_k = r exp(2 pi i (k + 1/2)/128) of
// |Psi_kappa R_kappa Psi_kappa^{-1} - 1|.
Real boundary_residual(const ParametrixSet& set, const MicroModel& mm, int samples = 128);

// Largest negative Laurent coefficient at z = 0, relative to the sampled
// scale, of (1 + F/z) Psi_K ztilde^{-K sigma3} (1 - M/zeta) and of the
// (jump-free) first column of Psi_kappa R_kappa.
struct AnalyticityReport {
  Real meromorphic_factor;
  Real first_column;
  Real z_minus2_condition;  // |F AB0 M| relative
};
AnalyticityReport analyticity_defect(const ParametrixSet& set, const MicroModel& mm,
                                     int max_order = 3);

}  // namespace hardedge
