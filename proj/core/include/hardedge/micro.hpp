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

#include "hardedge/numeric.hpp"
#include "hardedge/quadrature.hpp"

namespace hardedge {

// Sampled integration path for the Cauchy transform: a ray at angle theta,
// with P_l precomputed at every node.
struct CauchyRay {
  Real theta;
  std::vector<Real> s;            // arclength parameter of each node
  std::vector<Complex> xi;        // s e^{i theta}
  std::vector<Complex> weight;    // quadrature weight * xi^alpha e^{-V_m(xi)} e^{i theta}
  std::vector<std::vector<Complex>> P;      // P[i][l] = P_l(xi_i)
  std::vector<std::vector<Complex>> P_far;  // P_far[i][l] = xi_i^l P_l(xi_i)
  std::vector<Real> panel_lo, panel_hi;  // base panels in s
  std::vector<int> panel_begin;          // first node index of each panel
  int order = 0;                          // Gauss-Legendre order per panel
};

// Monic orthogonal polynomials for xi^alpha exp(-xi^nu - f(xi)) on [0, inf).
struct MicroModel {
  Real alpha;
  int nu = 1;
  std::vector<Real> f;  // f(xi) = sum_k f[k] xi^k, degree <= nu - 1
  int Kmax = 0;
  // P_{k+1} = (xi - rec_a[k]) P_k - rec_b[k] P_{k-1}; rec_b[0] = eta_0.
  std::vector<Real> rec_a, rec_b;
  std::vector<Real> norms;                   // eta_l, l = 0..Kmax
  std::vector<std::vector<Real>> coeffs;     // coeffs[l][j]: xi^j in P_l
  std::vector<Real> subleading;              // a_K, coefficient of xi^(K-1) in P_K
  QuadratureRule measure;                    // discretized weight on [0, L]
  int moment_order = 0;                      // largest j for moment(l, j)
  CauchyRay ray_down, ray_up;                // theta < 0 and theta > 0
  unsigned digits = 40;
};

// Throws InvalidInput for alpha <= -1, nu < 1, deg f >= nu, Kmax < 1.
// `moment_order` bounds the powers available through micro_moment; it
// defaults to 2 Kmax + 2.
MicroModel micro_model(const Real& alpha, int nu, const std::vector<Real>& f, int Kmax,
                       int moment_order = -1);

Real micro_potential(const MicroModel& mm, const Real& xi);
Complex micro_potential(const MicroModel& mm, const Complex& xi);
Real micro_poly(const MicroModel& mm, int ell, const Real& xi);
Complex micro_poly(const MicroModel& mm, int ell, const Complex& xi);
Real micro_poly_prime(const MicroModel& mm, int ell, const Real& xi);

// int P_ell(xi) xi^j xi^alpha e^{-V_m} dxi.
Real micro_moment(const MicroModel& mm, int ell, int j);

// C_ell(zeta) = (1/2 pi i) int P_ell xi^alpha e^{-V_m} / (xi - zeta) dxi for all
// ell = 0..Kmax at once; zeta must be off [0, inf).
std::vector<Complex> micro_cauchy_all(const MicroModel& mm, const Complex& zeta);
// Only degrees lo..hi (other entries of the result are zero).
std::vector<Complex> micro_cauchy_range(const MicroModel& mm, int lo, int hi,
                                        const Complex& zeta);
Complex micro_cauchy(const MicroModel& mm, int ell, const Complex& zeta);
// One-sided limit at zeta = x > 0 from above (side = +1) or below (-1).
std::vector<Complex> micro_cauchy_boundary_all(const MicroModel& mm, const Real& x, int side);
std::vector<Complex> micro_cauchy_boundary_range(const MicroModel& mm, int lo, int hi,
                                                 const Real& x, int side);
Complex micro_cauchy_boundary(const MicroModel& mm, int ell, const Real& x, int side);

// Zeros of P_K, ascending.
std::vector<Real> micro_zeros(const MicroModel& mm, int K);
// Zeros of P_K - lambda P_{K-1} (real lambda), ascending.
std::vector<Real> micro_zeros_mixed(const MicroModel& mm, int K, const Real& lambda);

}  // namespace hardedge
