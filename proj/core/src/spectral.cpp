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

#include "hardedge/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "hardedge/quadrature.hpp"

namespace hardedge {
namespace {

using boost::multiprecision::abs;
using boost::multiprecision::log;
using boost::multiprecision::pow;
using boost::multiprecision::sqrt;

Real convergence_tol() { return tenth_power(static_cast<int>(current_digits()) - 4); }

// Gauss-Legendre order for a panel whose nearest singularity sits one panel
// length beyond an endpoint (Bernstein parameter 3 + sqrt 8).
int panel_order() { return static_cast<int>(std::ceil(0.7 * current_digits())) + 10; }

// Applies `rule_for(m)` with doubling m until two successive sums agree.
template <typename Value, typename RuleFor, typename F>
Value doubling_sum(RuleFor rule_for, F f, int m0, int m_max, const char* what) {
  Value prev{};
  bool have_prev = false;
  const Real tol = convergence_tol();
  for (int m = m0; m <= m_max; m *= 2) {
    QuadratureRule rule = rule_for(m);
    Value s{};
    for (std::size_t i = 0; i < rule.size(); ++i) s += rule.weights[i] * f(rule.nodes[i]);
    if (have_prev) {
      Real diff = abs(s - prev);
      Real scale = std::max(Real(abs(s)), Real(1));
      if (diff <= tol * scale) return s;
    }
    prev = s;
    have_prev = true;
  }
  throw NumericalFailure(std::string(what) + ": quadrature did not converge");
}

// Taylor coefficients of sqrt((1 - a u)(1 - b u)) up to u^n.
std::vector<Real> sqrt_series(const Real& a, const Real& b, int n) {
  std::vector<Real> p(n + 1, Real(0));
  p[0] = 1;
  if (n >= 1) p[1] = -(a + b);
  if (n >= 2) p[2] = a * b;
  std::vector<Real> s(n + 1, Real(0));
  s[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Real acc = p[k];
    for (int j = 1; j < k; ++j) acc -= s[j] * s[k - j];
    s[k] = acc / 2;
  }
  return s;
}

Real poly_eval(const std::vector<Real>& c, const Real& x) {
  Real acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Integral of sqrt((s-a)(b-s)) F(s) over [a, b].
template <typename Value, typename F>
Value cut_integral(const CriticalPotential& cp, F f, const char* what) {
  return doubling_sum<Value>([&](int m) { return chebyshev_u(m, cp.a, cp.b); }, f, 32, 16384,
                             what);
}

// Integral of rho over [a, x] for x in [a, b].
Real mass_below(const CriticalPotential& cp, const Real& x) {
  const Real mid = (cp.a + cp.b) / 2;
  const Real two_pi = 2 * pi();
  if (x <= mid) {
    // rho = Q(s) sqrt(b-s) (s-a)^(1/2) / 2pi on [a, x].
    auto f = [&](const Real& s) { return Q_poly(cp, s) * sqrt(cp.b - s) / two_pi; };
    return doubling_sum<Real>(
        [&](int m) { return gauss_jacobi(m, cp.a, x, Real(0), Real(0.5)); }, f, 16, 4096,
        "mass_below");
  }
  auto f = [&](const Real& s) { return Q_poly(cp, s) * sqrt(s - cp.a) / two_pi; };
  Real upper = doubling_sum<Real>(
      [&](int m) { return gauss_jacobi(m, x, cp.b, Real(0.5), Real(0)); }, f, 16, 4096,
      "mass_below");
  return cp.T - upper;
}

// Integral of phi' over [b, x] for x > b.
Real phi_right(const CriticalPotential& cp, const Real& x) {
  const Real w1 = std::min(Real(x - cp.b), Real(cp.b - cp.a));
  auto f_edge = [&](const Real& s) { return Q_poly(cp, s) * sqrt(s - cp.a) / 2; };
  Real total = doubling_sum<Real>(
      [&](int m) { return gauss_jacobi(m, cp.b, Real(cp.b + w1), Real(0), Real(0.5)); }, f_edge,
      16, 4096, "effective_potential");
  Real lo = cp.b + w1;
  const int m = panel_order();
  while (lo < x) {
    Real hi = std::min(Real(x), Real(lo + (lo - cp.b)));
    QuadratureRule rule = gauss_legendre(m, lo, hi);
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const Real& s = rule.nodes[i];
      total += rule.weights[i] * Q_poly(cp, s) * sqrt((s - cp.a) * (s - cp.b)) / 2;
    }
    lo = hi;
  }
  return total;
}

// Gauss-Legendre order on [0, 1] for an integrand analytic except at u = R > 1.
int series_order(const Real& R) {
  double t = 2 * static_cast<double>(R) - 1;
  double rho = t + std::sqrt(t * t - 1);
  double m = (current_digits() + 5) * std::log(10.0) / (2 * std::log(rho)) + 4;
  if (!(m < 4000)) throw NumericalFailure("phi_over_power: point too close to the band edge");
  return std::max(16, static_cast<int>(std::ceil(m)));
}

}  // namespace

CriticalPotential build_critical_potential(const Real& a, const Real& b, const Real& T, int nu) {
  if (!(a > 0)) throw InvalidInput("build_critical_potential: a must be positive");
  if (!(b > a)) throw InvalidInput("build_critical_potential: need a < b");
  if (!(T > 0)) throw InvalidInput("build_critical_potential: T must be positive");
  if (nu < 1) throw InvalidInput("build_critical_potential: nu must be >= 1");

  CriticalPotential cp;
  cp.a = a * 1;
  cp.b = b * 1;
  cp.T = T * 1;
  cp.nu = nu;
  cp.digits = current_digits();

  // c = int_0^a x^nu h / int_0^a x^(nu-1) h, h = sqrt((a-x)(b-x)).
  auto moment = [&](int k) {
    auto f = [&](const Real& x) { return pow(x, k) * sqrt(cp.b - x); };
    return doubling_sum<Real>(
        [&](int m) { return gauss_jacobi(m, Real(0), cp.a, Real(0.5), Real(0)); }, f, 16, 4096,
        "build_critical_potential");
  };
  cp.c = moment(nu) / moment(nu - 1);

  // Q with q = 1 integrated against the semicircle weight: exact at nu + 2 nodes.
  QuadratureRule cheb = chebyshev_u(nu + 2, cp.a, cp.b);
  Real mass1 = 0;
  for (std::size_t i = 0; i < cheb.size(); ++i) {
    const Real& x = cheb.nodes[i];
    mass1 += cheb.weights[i] * pow(x, nu - 1) * (x - cp.c);
  }
  cp.q = 2 * pi() * cp.T / mass1;

  std::vector<Real> s = sqrt_series(cp.a, cp.b, nu + 2);
  cp.q_laurent = -2 * cp.T / (s[nu + 2] - cp.c * s[nu + 1]);
  cp.C0 = cp.q * cp.c * sqrt(cp.a * cp.b) / (2 * nu);

  // V' = polynomial part of Q S.
  cp.V.assign(nu + 3, Real(0));
  for (int m = 0; m <= nu + 1; ++m) {
    Real sm = s[nu + 1 - m];
    Real sm1 = (nu - m >= 0) ? s[nu - m] : Real(0);
    cp.V[m + 1] = cp.q * (sm - cp.c * sm1) / (m + 1);
  }
  // phi(0) = 0 fixes V(0) = 2 Re g(0).
  cp.V[0] = 2 * g_real(cp, Real(0));
  return cp;
}

Complex branch_S(const CriticalPotential& cp, const Complex& z) {
  return sqrt(z - Complex(cp.a)) * sqrt(z - Complex(cp.b));
}

Real Q_poly(const CriticalPotential& cp, const Real& x) {
  return cp.q * pow(x, cp.nu - 1) * (x - cp.c);
}

Complex Q_poly(const CriticalPotential& cp, const Complex& z) {
  return cp.q * powi(z, cp.nu - 1) * (z - Complex(cp.c));
}

Real density(const CriticalPotential& cp, const Real& x) {
  if (x <= cp.a || x >= cp.b) return Real(0);
  return Q_poly(cp, x) * sqrt((x - cp.a) * (cp.b - x)) / (2 * pi());
}

Real potential_V(const CriticalPotential& cp, const Real& x) { return poly_eval(cp.V, x); }

Real potential_V_prime(const CriticalPotential& cp, const Real& x) {
  Real acc = 0;
  for (int k = static_cast<int>(cp.V.size()) - 1; k >= 1; --k) acc = acc * x + k * cp.V[k];
  return acc;
}

Real effective_potential(const CriticalPotential& cp, const Real& x) {
  if (x < 0) throw InvalidInput("effective_potential: x must be >= 0");
  if (x == 0) return Real(0);
  if (x >= cp.a && x <= cp.b) return Real(0);
  if (x > cp.b) return phi_right(cp, x);
  if (x <= cp.a / 2) return phi_near_edge(cp, Complex(x)).re;
  return effective_potential_from_edge(cp, x);
}

Real effective_potential_from_edge(const CriticalPotential& cp, const Real& x) {
  if (!(x > 0 && x < cp.a)) throw InvalidInput("effective_potential_from_edge: need 0 < x < a");
  auto f = [&](const Real& s) { return Q_poly(cp, s) * sqrt(cp.b - s) / 2; };
  return doubling_sum<Real>(
      [&](int m) { return gauss_jacobi(m, x, cp.a, Real(0.5), Real(0)); }, f, 16, 4096,
      "effective_potential_from_edge");
}

Complex g_value(const CriticalPotential& cp, const Complex& z) {
  if (z.im == 0 && z.re >= cp.a) throw InvalidInput("g_value: z on [a, +inf); use g_boundary");
  const Real inv_two_pi = 1 / (2 * pi());
  auto f = [&](const Real& s) {
    // log with arg in (0, 2 pi): log(-(z - s)) + i pi.
    Complex L = log(Complex(s) - z);
    L.im += pi();
    return Q_poly(cp, s) * inv_two_pi * L;
  };
  return cut_integral<Complex>(cp, f, "g_value");
}

Real g_real(const CriticalPotential& cp, const Real& x) {
  if (x >= cp.a && x <= cp.b) return potential_V(cp, x) / 2;
  const Real inv_two_pi = 1 / (2 * pi());
  auto f = [&](const Real& s) { return Q_poly(cp, s) * inv_two_pi * log(abs(x - s)); };
  return cut_integral<Real>(cp, f, "g_real");
}

Complex g_boundary(const CriticalPotential& cp, const Real& x, int side) {
  if (side != 1 && side != -1) throw InvalidInput("g_boundary: side must be +1 or -1");
  if (x < cp.a) throw InvalidInput("g_boundary: x must be >= a");
  if (x > cp.b) {
    Real re = g_real(cp, x);
    return {re, side > 0 ? Real(0) : Real(2 * pi() * cp.T)};
  }
  Real M = mass_below(cp, x);
  Real re = potential_V(cp, x) / 2;
  return {re, side > 0 ? Real(pi() * (cp.T - M)) : Real(pi() * (cp.T + M))};
}

Complex z_of_t(const CriticalPotential& cp, const Complex& t) {
  return (cp.b - cp.a) / 4 * (t + Complex(1) / t) + Complex((cp.a + cp.b) / 2);
}

Complex t_of_z(const CriticalPotential& cp, const Complex& z) {
  Complex t = (2 / (cp.b - cp.a)) * (z - Complex((cp.a + cp.b) / 2) + branch_S(cp, z));
  if (norm2(t) < 1 - tenth_power(static_cast<int>(current_digits()) / 2)) {
    throw NumericalFailure("t_of_z: inverse landed off the physical sheet");
  }
  return t;
}

Complex phi_over_power(const CriticalPotential& cp, const Complex& z) {
  Real R = abs(z) > 0 ? Real(cp.a / abs(z)) : Real(1e6);
  if (!(R > 1)) throw InvalidInput("phi_over_power: need |z| < a");
  QuadratureRule rule = gauss_legendre(series_order(R), Real(0), Real(1));
  Complex acc;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const Real& u = rule.nodes[i];
    Complex s = z * u;
    acc += (rule.weights[i] * pow(u, cp.nu - 1)) * ((s - Complex(cp.c)) * branch_S(cp, s));
  }
  return acc * (cp.q / 2);
}

Complex phi_over_power_prime(const CriticalPotential& cp, const Complex& z) {
  Real R = abs(z) > 0 ? Real(cp.a / abs(z)) : Real(1e6);
  if (!(R > 1)) throw InvalidInput("phi_over_power_prime: need |z| < a");
  QuadratureRule rule = gauss_legendre(series_order(R), Real(0), Real(1));
  const Complex mid((cp.a + cp.b) / 2);
  Complex acc;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const Real& u = rule.nodes[i];
    Complex s = z * u;
    Complex S = branch_S(cp, s);
    Complex Sp = (s - mid) / S;
    acc += (rule.weights[i] * pow(u, cp.nu)) * (S + (s - Complex(cp.c)) * Sp);
  }
  return acc * (cp.q / 2);
}

Complex phi_near_edge(const CriticalPotential& cp, const Complex& z) {
  return powi(z, cp.nu) * phi_over_power(cp, z);
}

Complex eta(const ConformalFrame& fr, const Complex& z) {
  return fr.gamma * log(phi_over_power(fr.cp, z) / Complex(fr.cp.C0));
}

Complex eta_prime(const ConformalFrame& fr, const Complex& z) {
  return fr.gamma * (phi_over_power_prime(fr.cp, z) / phi_over_power(fr.cp, z));
}

Complex ztilde(const ConformalFrame& fr, const Complex& z) { return z * exp(eta(fr, z)); }

Complex ztilde_prime(const ConformalFrame& fr, const Complex& z) {
  return exp(eta(fr, z)) * (Complex(1) + z * eta_prime(fr, z));
}

Real zeta_scale(const ConformalFrame& fr, const Real& N) { return pow(fr.Ctilde0 * N, fr.gamma); }

Complex zeta_of_z(const ConformalFrame& fr, const Real& N, const Complex& z) {
  return zeta_scale(fr, N) * ztilde(fr, z);
}

Real x_of_ztilde(const ConformalFrame& fr, const Real& zt) {
  if (zt < 0) throw InvalidInput("x_of_ztilde: need ztilde >= 0");
  if (zt == 0) return Real(0);
  Real x = zt;
  const Real tol = tenth_power(static_cast<int>(current_digits()) - 2);
  for (int it = 0; it < 100; ++it) {
    if (!(x > 0 && x < fr.disk_radius * 2)) break;
    Complex z(x);
    Real dx = (ztilde(fr, z).re - zt) / ztilde_prime(fr, z).re;
    x -= dx;
    if (abs(dx) <= tol * abs(x)) return x;
  }
  throw NumericalFailure("x_of_ztilde: Newton iteration failed (point outside the disk?)");
}

ConformalFrame conformal_frame(const CriticalPotential& cp) {
  ConformalFrame fr;
  fr.cp = cp;
  Real w0 = -(cp.a + cp.b) / (cp.b - cp.a);
  fr.t0 = w0 - sqrt(w0 * w0 - 1);
  fr.Ctilde0 = 2 * cp.C0 / cp.T;
  fr.gamma = Real(1) / cp.nu;

  // Starlike on every sampled circle: Re(z ztilde'/ztilde) = Re(1 + z eta') > 0,
  // with Re I > 0 so the principal logarithm in eta stays continuous.
  auto circle_ok = [&](const Real& rad, int samples) {
    const Real two_pi = 2 * pi();
    for (int k = 0; k < samples; ++k) {
      Complex z = polar(rad, two_pi * k / samples);
      Complex I = phi_over_power(cp, z);
      if (!(I.re > 0)) return false;
      Complex w = Complex(1) + z * (fr.gamma * (phi_over_power_prime(cp, z) / I));
      if (!(w.re > 0)) return false;
    }
    return true;
  };

  Real r = cp.a / 2;
  for (int halving = 0; halving <= 6; ++halving) {
    bool ok = circle_ok(r, 256);
    for (int j = 1; ok && j <= 16; ++j) ok = circle_ok(r * j / 17, 32);
    if (ok) {
      fr.disk_radius = r;
      fr.disk_halvings = halving;
      return fr;
    }
    r /= 2;
  }
  throw NumericalFailure("conformal_frame: no univalent disk after 6 halvings");
}

}  // namespace hardedge
