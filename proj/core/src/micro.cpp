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

#include "hardedge/micro.hpp"

#include <algorithm>
#include <cmath>

namespace hardedge {
namespace {

using boost::multiprecision::abs;
using boost::multiprecision::exp;
using boost::multiprecision::log;
using boost::multiprecision::pow;
using boost::multiprecision::sqrt;

int panel_order() { return static_cast<int>(std::ceil(0.7 * current_digits())) + 10; }

// Panel width keeping exp(-xi^nu) well resolved by panel_order() nodes.
Real max_width(int nu, const Real& s) {
  Real slope = nu * pow(s, nu - 1);
  return Real(8) / std::max(Real(1), slope);
}

// Smallest L (on a 1.1 geometric grid) with decay(L) >= target + growth * ln L.
template <typename Decay>
Real tail_cutoff(Decay decay, const Real& target, const Real& growth, int nu) {
  Real L = std::max(Real(1), pow(target, Real(1) / nu));
  for (int it = 0; it < 400; ++it) {
    if (decay(L) >= target + growth * log(std::max(L, Real(3)))) return L;
    L *= Real(1.1);
  }
  throw NumericalFailure("micro_model: tail cutoff not found");
}

// Panels [lo, hi] from 0 to L: Gauss-Jacobi first, then widths bounded by
// both the distance to 0 and max_width.
void build_panels(int nu, const Real& L, std::vector<Real>& lo, std::vector<Real>& hi) {
  Real x = std::min(Real(1), max_width(nu, Real(1)));
  lo.push_back(Real(0));
  hi.push_back(x);
  while (x < L) {
    Real w = std::min(x, max_width(nu, x + x));
    Real next = std::min(Real(x + w), L);
    lo.push_back(x);
    hi.push_back(next);
    x = next;
  }
}

// Nodes on one panel of a ray with exp(i theta): s-weights include s^alpha
// (Gauss-Jacobi on the first panel).
void panel_nodes(const Real& alpha, const Real& lo, const Real& hi, int m,
                 std::vector<Real>& s, std::vector<Real>& w) {
  QuadratureRule rule;
  if (lo == 0) {
    rule = gauss_jacobi(m, lo, hi, Real(0), alpha);
    s = std::move(rule.nodes);
    w = std::move(rule.weights);
    return;
  }
  rule = gauss_legendre(m, lo, hi);
  s = std::move(rule.nodes);
  w = std::move(rule.weights);
  for (std::size_t i = 0; i < s.size(); ++i) w[i] *= pow(s[i], alpha);
}

std::vector<Complex> poly_values(const MicroModel& mm, const Complex& xi) {
  std::vector<Complex> P(mm.Kmax + 1);
  P[0] = Complex(1);
  if (mm.Kmax >= 1) P[1] = xi - Complex(mm.rec_a[0]);
  for (int k = 1; k < mm.Kmax; ++k) {
    P[k + 1] = (xi - Complex(mm.rec_a[k])) * P[k] - mm.rec_b[k] * P[k - 1];
  }
  return P;
}

CauchyRay build_ray(const MicroModel& mm, const Real& theta) {
  CauchyRay ray;
  ray.theta = theta;
  ray.order = panel_order();
  const Complex dir = polar(Real(1), theta);
  const Real target = (current_digits() + 10) * log(Real(10));
  auto decay = [&](const Real& s) {
    return micro_potential(mm, s * dir).re - abs(mm.alpha) * log(s);
  };
  Real L = tail_cutoff(decay, target, Real(2 * mm.Kmax + 2), mm.nu);
  build_panels(mm.nu, L, ray.panel_lo, ray.panel_hi);
  const Complex phase = polar(Real(1), (mm.alpha + 1) * theta);
  for (std::size_t p = 0; p < ray.panel_lo.size(); ++p) {
    ray.panel_begin.push_back(static_cast<int>(ray.s.size()));
    std::vector<Real> s, w;
    panel_nodes(mm.alpha, ray.panel_lo[p], ray.panel_hi[p], ray.order, s, w);
    for (std::size_t i = 0; i < s.size(); ++i) {
      Complex xi = s[i] * dir;
      ray.s.push_back(s[i]);
      ray.xi.push_back(xi);
      ray.weight.push_back(w[i] * phase * exp(-micro_potential(mm, xi)));
    }
  }
  ray.P.reserve(ray.xi.size());
  ray.P_far.reserve(ray.xi.size());
  for (std::size_t i = 0; i < ray.xi.size(); ++i) {
    std::vector<Complex> P = poly_values(mm, ray.xi[i]);
    std::vector<Complex> Pf(P.size());
    Complex xl(1);
    for (int l = 0; l <= mm.Kmax; ++l) {
      Pf[l] = P[l] * xl;
      xl *= ray.xi[i];
    }
    ray.P.push_back(std::move(P));
    ray.P_far.push_back(std::move(Pf));
  }
  return ray;
}

// Sums W P_l(xi) / (xi - zeta) for l in [lo, hi]; in the far-field form
// (|zeta| > 1) sums W xi^l P_l(xi) / (xi - zeta) instead, which equals
// zeta^l times the same integral by orthogonality and avoids cancellation.
struct CauchyAccumulator {
  const MicroModel& mm;
  Complex zeta;
  int lo, hi;
  bool far;
  std::vector<Complex> acc;

  CauchyAccumulator(const MicroModel& m, int l0, int l1, const Complex& z)
      : mm(m), zeta(z), lo(l0), hi(l1), far(abs(z) > 1), acc(m.Kmax + 1) {}

  void add(const Complex& xi, const Complex& W, const std::vector<Complex>& P,
           const std::vector<Complex>& P_far) {
    Complex inv = W / (xi - zeta);
    const std::vector<Complex>& use = far ? P_far : P;
    for (int l = lo; l <= hi; ++l) acc[l] += use[l] * inv;
  }

  void add_fresh(const Complex& xi, const Complex& W) {
    std::vector<Complex> P = poly_values(mm, xi);
    std::vector<Complex> Pf;
    if (far) {
      Pf.resize(P.size());
      Complex xl(1);
      for (int l = 0; l <= mm.Kmax; ++l) {
        Pf[l] = P[l] * xl;
        xl *= xi;
      }
    }
    add(xi, W, P, Pf);
  }
};

void refine_segment(const MicroModel& mm, const CauchyRay& ray, const Real& lo, const Real& hi,
                    CauchyAccumulator& A, int depth) {
  const Complex dir = polar(Real(1), ray.theta);
  Real half = (hi - lo) / 2;
  Real dist = abs((lo + half) * dir - A.zeta);
  if (dist < 3 * half) {
    if (depth > 80) throw NumericalFailure("micro_cauchy: pole too close to the integration ray");
    refine_segment(mm, ray, lo, lo + half, A, depth + 1);
    refine_segment(mm, ray, lo + half, hi, A, depth + 1);
    return;
  }
  std::vector<Real> s, w;
  panel_nodes(mm.alpha, lo, hi, ray.order, s, w);
  const Complex phase = polar(Real(1), (mm.alpha + 1) * ray.theta);
  for (std::size_t i = 0; i < s.size(); ++i) {
    Complex xi = s[i] * dir;
    A.add_fresh(xi, w[i] * phase * exp(-micro_potential(mm, xi)));
  }
}

std::vector<Complex> cauchy_on_ray(const MicroModel& mm, const CauchyRay& ray, int lo, int hi,
                                   const Complex& zeta) {
  if (lo < 0 || hi > mm.Kmax || lo > hi) throw InvalidInput("micro_cauchy: degree out of range");
  CauchyAccumulator A(mm, lo, hi, zeta);
  const Complex dir = polar(Real(1), ray.theta);
  for (std::size_t p = 0; p < ray.panel_lo.size(); ++p) {
    const Real& plo = ray.panel_lo[p];
    const Real& phi = ray.panel_hi[p];
    Real half = (phi - plo) / 2;
    Real dist = abs((plo + half) * dir - zeta);
    if (dist < 3 * half) {
      refine_segment(mm, ray, plo, phi, A, 0);
      continue;
    }
    int begin = ray.panel_begin[p];
    int end = (p + 1 < ray.panel_lo.size()) ? ray.panel_begin[p + 1]
                                            : static_cast<int>(ray.xi.size());
    for (int i = begin; i < end; ++i) A.add(ray.xi[i], ray.weight[i], ray.P[i], ray.P_far[i]);
  }
  Complex scale = Complex(1) / two_pi_i();
  if (A.far) scale *= powi(Complex(1) / zeta, lo);
  const Complex inv_zeta = Complex(1) / zeta;
  for (int l = lo; l <= hi; ++l) {
    A.acc[l] *= scale;
    if (A.far) scale *= inv_zeta;
  }
  return A.acc;
}

std::vector<Real> jacobi_eigenvalues(const MicroModel& mm, int K, const Real& shift) {
  std::vector<Real> diag(mm.rec_a.begin(), mm.rec_a.begin() + K);
  diag[K - 1] += shift;
  std::vector<Real> off;
  for (int k = 1; k < K; ++k) off.push_back(sqrt(mm.rec_b[k]));
  return tridiagonal_eigen(std::move(diag), std::move(off)).values;
}

}  // namespace

Real micro_potential(const MicroModel& mm, const Real& xi) {
  Real acc = 0;
  for (auto it = mm.f.rbegin(); it != mm.f.rend(); ++it) acc = acc * xi + *it;
  return pow(xi, mm.nu) + acc;
}

Complex micro_potential(const MicroModel& mm, const Complex& xi) {
  Complex acc;
  for (auto it = mm.f.rbegin(); it != mm.f.rend(); ++it) acc = acc * xi + Complex(*it);
  return powi(xi, mm.nu) + acc;
}

MicroModel micro_model(const Real& alpha, int nu, const std::vector<Real>& f, int Kmax,
                       int moment_order) {
  if (!(alpha > -1)) throw InvalidInput("micro_model: alpha must exceed -1");
  if (nu < 1) throw InvalidInput("micro_model: nu must be >= 1");
  if (static_cast<int>(f.size()) > nu) {
    bool nonzero_high = false;
    for (std::size_t k = nu; k < f.size(); ++k) nonzero_high |= (f[k] != 0);
    if (nonzero_high) throw InvalidInput("micro_model: deg f must be <= nu - 1");
  }
  if (Kmax < 1) throw InvalidInput("micro_model: Kmax must be >= 1");

  MicroModel mm;
  mm.alpha = alpha * 1;
  mm.nu = nu;
  for (std::size_t k = 0; k < std::min<std::size_t>(f.size(), nu); ++k) mm.f.push_back(f[k] * 1);
  mm.Kmax = Kmax;
  mm.moment_order = moment_order < 0 ? 2 * Kmax + 2 : moment_order;
  mm.digits = current_digits();

  // Discretized weight on [0, L].
  const Real target = (current_digits() + 10) * log(Real(10));
  auto decay = [&](const Real& s) { return micro_potential(mm, s) - abs(mm.alpha) * log(s); };
  Real L = tail_cutoff(decay, target, Real(mm.moment_order + 2 * Kmax + 4), nu);
  std::vector<Real> lo, hi;
  build_panels(nu, L, lo, hi);
  const int m = panel_order();
  for (std::size_t p = 0; p < lo.size(); ++p) {
    std::vector<Real> s, w;
    panel_nodes(mm.alpha, lo[p], hi[p], m, s, w);
    for (std::size_t i = 0; i < s.size(); ++i) {
      mm.measure.nodes.push_back(s[i]);
      mm.measure.weights.push_back(w[i] * exp(-micro_potential(mm, s[i])));
    }
  }

  // Stieltjes procedure.
  const std::size_t n = mm.measure.size();
  const auto& x = mm.measure.nodes;
  const auto& w = mm.measure.weights;
  std::vector<Real> p_prev(n, Real(0)), p_cur(n, Real(1));
  Real norm_prev = 1;
  for (int k = 0; k <= Kmax; ++k) {
    Real nrm = 0, xn = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Real wp = w[i] * p_cur[i] * p_cur[i];
      nrm += wp;
      xn += wp * x[i];
    }
    if (!(nrm > 0)) throw NumericalFailure("micro_model: nonpositive norm; increase precision");
    mm.norms.push_back(nrm);
    mm.rec_a.push_back(xn / nrm);
    mm.rec_b.push_back(k == 0 ? nrm : Real(nrm / norm_prev));
    norm_prev = nrm;
    if (k == Kmax) break;
    for (std::size_t i = 0; i < n; ++i) {
      Real next = (x[i] - mm.rec_a[k]) * p_cur[i] - (k == 0 ? Real(0) : Real(mm.rec_b[k] * p_prev[i]));
      p_prev[i] = std::move(p_cur[i]);
      p_cur[i] = std::move(next);
    }
  }

  // Monomial coefficients and subleading terms.
  mm.coeffs.assign(Kmax + 1, {});
  mm.coeffs[0] = {Real(1)};
  for (int k = 0; k < Kmax; ++k) {
    std::vector<Real> next(k + 2, Real(0));
    for (int j = 0; j <= k; ++j) {
      next[j + 1] += mm.coeffs[k][j];
      next[j] -= mm.rec_a[k] * mm.coeffs[k][j];
    }
    if (k >= 1) {
      for (int j = 0; j < k; ++j) next[j] -= mm.rec_b[k] * mm.coeffs[k - 1][j];
    }
    mm.coeffs[k + 1] = std::move(next);
  }
  mm.subleading.assign(Kmax + 1, Real(0));
  for (int K = 1; K <= Kmax; ++K) mm.subleading[K] = mm.coeffs[K][K - 1];

  const Real theta = pi() / (3 * nu);
  mm.ray_down = build_ray(mm, -theta);
  mm.ray_up = build_ray(mm, theta);
  return mm;
}

Real micro_poly(const MicroModel& mm, int ell, const Real& xi) {
  if (ell < 0 || ell > mm.Kmax) throw InvalidInput("micro_poly: degree out of range");
  Real p0 = 1;
  if (ell == 0) return p0;
  Real p1 = xi - mm.rec_a[0];
  for (int k = 1; k < ell; ++k) {
    Real p2 = (xi - mm.rec_a[k]) * p1 - mm.rec_b[k] * p0;
    p0 = std::move(p1);
    p1 = std::move(p2);
  }
  return p1;
}

Complex micro_poly(const MicroModel& mm, int ell, const Complex& xi) {
  if (ell < 0 || ell > mm.Kmax) throw InvalidInput("micro_poly: degree out of range");
  return poly_values(mm, xi)[ell];
}

Real micro_poly_prime(const MicroModel& mm, int ell, const Real& xi) {
  if (ell < 0 || ell > mm.Kmax) throw InvalidInput("micro_poly_prime: degree out of range");
  if (ell == 0) return Real(0);
  Real p0 = 1, p1 = xi - mm.rec_a[0];
  Real d0 = 0, d1 = 1;
  for (int k = 1; k < ell; ++k) {
    Real p2 = (xi - mm.rec_a[k]) * p1 - mm.rec_b[k] * p0;
    Real d2 = p1 + (xi - mm.rec_a[k]) * d1 - mm.rec_b[k] * d0;
    p0 = std::move(p1);
    p1 = std::move(p2);
    d0 = std::move(d1);
    d1 = std::move(d2);
  }
  return d1;
}

Real micro_moment(const MicroModel& mm, int ell, int j) {
  if (ell < 0 || ell > mm.Kmax) throw InvalidInput("micro_moment: degree out of range");
  if (j < 0 || j > mm.moment_order) throw InvalidInput("micro_moment: power out of range");
  Real acc = 0;
  for (std::size_t i = 0; i < mm.measure.size(); ++i) {
    const Real& x = mm.measure.nodes[i];
    acc += mm.measure.weights[i] * micro_poly(mm, ell, x) * pow(x, j);
  }
  return acc;
}

std::vector<Complex> micro_cauchy_range(const MicroModel& mm, int lo, int hi,
                                        const Complex& zeta) {
  if (zeta.im == 0 && zeta.re >= 0) {
    throw InvalidInput("micro_cauchy: zeta on [0, inf); use the boundary variant");
  }
  return cauchy_on_ray(mm, zeta.im >= 0 ? mm.ray_down : mm.ray_up, lo, hi, zeta);
}

std::vector<Complex> micro_cauchy_all(const MicroModel& mm, const Complex& zeta) {
  return micro_cauchy_range(mm, 0, mm.Kmax, zeta);
}

Complex micro_cauchy(const MicroModel& mm, int ell, const Complex& zeta) {
  if (ell < 0 || ell > mm.Kmax) throw InvalidInput("micro_cauchy: degree out of range");
  return micro_cauchy_range(mm, ell, ell, zeta)[ell];
}

std::vector<Complex> micro_cauchy_boundary_range(const MicroModel& mm, int lo, int hi,
                                                 const Real& x, int side) {
  if (!(x > 0)) throw InvalidInput("micro_cauchy_boundary: need x > 0");
  if (side != 1 && side != -1) throw InvalidInput("micro_cauchy_boundary: side must be +1 or -1");
  return cauchy_on_ray(mm, side > 0 ? mm.ray_down : mm.ray_up, lo, hi, Complex(x));
}

std::vector<Complex> micro_cauchy_boundary_all(const MicroModel& mm, const Real& x, int side) {
  return micro_cauchy_boundary_range(mm, 0, mm.Kmax, x, side);
}

Complex micro_cauchy_boundary(const MicroModel& mm, int ell, const Real& x, int side) {
  if (ell < 0 || ell > mm.Kmax) throw InvalidInput("micro_cauchy_boundary: degree out of range");
  return micro_cauchy_boundary_range(mm, ell, ell, x, side)[ell];
}

std::vector<Real> micro_zeros(const MicroModel& mm, int K) {
  if (K < 0 || K > mm.Kmax) throw InvalidInput("micro_zeros: degree out of range");
  if (K == 0) return {};
  return jacobi_eigenvalues(mm, K, Real(0));
}

std::vector<Real> micro_zeros_mixed(const MicroModel& mm, int K, const Real& lambda) {
  if (K < 1 || K > mm.Kmax) throw InvalidInput("micro_zeros_mixed: degree out of range");
  return jacobi_eigenvalues(mm, K, lambda);
}

}  // namespace hardedge
