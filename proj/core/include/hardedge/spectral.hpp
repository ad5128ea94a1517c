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

namespace hardedge {

// One-cut equilibrium data on [a, b] whose effective potential vanishes like
// C0 x^nu at the hard edge x = 0.
//
// The density is rho(x) = Q(x) sqrt((x-a)(b-x)) / (2 pi) with
// Q(x) = q x^(nu-1) (x - c), and phi'(z) = Q(z) S(z) / 2 where
// S(z) = sqrt(z-a) sqrt(z-b) ~ z at infinity.
struct CriticalPotential {
  Real a, b, T;
  int nu = 1;
  Real q, c, C0;
  // V(x) = sum_k V[k] x^k, degree nu + 2, normalized so that
  // phi = V/2 - Re g on the real axis outside the cut.
  std::vector<Real> V;
  // q recomputed from the z^-1 Laurent coefficient of Q S; agrees with q to
  // working precision when the construction is consistent.
  Real q_laurent;
  unsigned digits = 40;
};

// Throws InvalidInput unless 0 < a < b, T > 0, nu >= 1.
CriticalPotential build_critical_potential(const Real& a, const Real& b, const Real& T, int nu);

// sqrt(z-a) sqrt(z-b), analytic off [a, b], negative on (-inf, a).
Complex branch_S(const CriticalPotential& cp, const Complex& z);
Real density(const CriticalPotential& cp, const Real& x);
Real Q_poly(const CriticalPotential& cp, const Real& x);
Complex Q_poly(const CriticalPotential& cp, const Complex& z);
Real potential_V(const CriticalPotential& cp, const Real& x);
Real potential_V_prime(const CriticalPotential& cp, const Real& x);

// phi(x) for x >= 0: zero on [a, b], positive elsewhere.
Real effective_potential(const CriticalPotential& cp, const Real& x);
// phi(x) on (0, a) by the quadrature of phi' from a (independent of the
// series route used near 0).
Real effective_potential_from_edge(const CriticalPotential& cp, const Real& x);

// g(z) = int rho(s) log(z - s) ds with the logarithm cut along [a, +inf),
// i.e. arg(z - s) in (0, 2 pi). Rejects z on [a, +inf).
Complex g_value(const CriticalPotential& cp, const Complex& z);
// Boundary value of g at real x >= a from above (side = +1) or below (-1).
Complex g_boundary(const CriticalPotential& cp, const Real& x, int side);
// Re g(x) for real x, continuous across the whole axis.
Real g_real(const CriticalPotential& cp, const Real& x);

// Uniformization z(t) = (b-a)/4 (t + 1/t) + (a+b)/2 and its inverse on the
// physical sheet |t| > 1.
Complex z_of_t(const CriticalPotential& cp, const Complex& t);
Complex t_of_z(const CriticalPotential& cp, const Complex& z);

struct ConformalFrame {
  CriticalPotential cp;
  Real t0;
  Real Ctilde0;  // 2 C0 / T
  Real gamma;    // 1 / nu
  Real disk_radius;
  int disk_halvings = 0;
};

// Chooses the disk: starting at a/2, halves until the map z -> ztilde is
// starlike on the circle (hence univalent on the disk), at most 6 times.
ConformalFrame conformal_frame(const CriticalPotential& cp);

// I(z) = phi(z) / z^nu, analytic on |z| < a with I(0) = C0.
Complex phi_over_power(const CriticalPotential& cp, const Complex& z);
Complex phi_over_power_prime(const CriticalPotential& cp, const Complex& z);
// phi(z) = z^nu I(z) near the hard edge.
Complex phi_near_edge(const CriticalPotential& cp, const Complex& z);

// eta(z) = gamma log(I(z) / C0); ztilde = z exp(eta) = (phi/C0)^gamma.
Complex eta(const ConformalFrame& fr, const Complex& z);
Complex eta_prime(const ConformalFrame& fr, const Complex& z);
Complex ztilde(const ConformalFrame& fr, const Complex& z);
Complex ztilde_prime(const ConformalFrame& fr, const Complex& z);
// zeta = (Ctilde0 N)^gamma ztilde.
Complex zeta_of_z(const ConformalFrame& fr, const Real& N, const Complex& z);
// (Ctilde0 N)^gamma
Real zeta_scale(const ConformalFrame& fr, const Real& N);
// Real inverse of ztilde on [0, disk_radius) by Newton iteration.
Real x_of_ztilde(const ConformalFrame& fr, const Real& zt);

}  // namespace hardedge
