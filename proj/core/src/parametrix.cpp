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

#include "hardedge/parametrix.hpp"

#include <algorithm>
#include <cmath>

namespace hardedge {

namespace {

Complex t_boundary(const CriticalPotential& cp, const Real& x, int side) {
  if (!(x > cp.a && x < cp.b)) throw InvalidInput("boundary value: need a < x < b");
  if (side != 1 && side != -1) throw InvalidInput("boundary value: side must be +1 or -1");
  Real h = sqrt((x - cp.a) * (cp.b - x));
  return Complex(2 * (x - (cp.a + cp.b) / 2) / (cp.b - cp.a), 2 * side * h / (cp.b - cp.a));
}

Complex szego_of_t(const ConformalFrame& fr, const Real& alpha, const Complex& t) {
  return szego_infinity(fr, alpha) * pow(Complex(1) - Complex(1) / (fr.t0 * t), alpha);
}

Matrix2 psi_of_t(const ConformalFrame& fr, const Real& alpha, int K, int r, const Complex& t) {
  const CriticalPotential& cp = fr.cp;
  Real quarter = (cp.b - cp.a) / 4;
  Complex D = szego_of_t(fr, alpha, t);
  Complex sq = sqrt(Complex(1) - Complex(1) / (t * t));
  Matrix2 core{powi(t, r), I() * powi(t, -r - 1), -I() * powi(t, r - 1), powi(t, -r)};
  core *= Complex(1) / sq;
  Complex left = szego_infinity(fr, alpha) * pow(fr.t0, K) * pow(quarter, r);
  Complex right = powi((t - Complex(fr.t0)) / (fr.t0 * t - Complex(1)), K) / D;
  return Matrix2::diag_pow(left) * core * Matrix2::diag_pow(right);
}

void check_edges(const ConformalFrame& fr, const Complex& z) {
  Real rad = edge_exclusion_radius(fr);
  if (abs(z - Complex(fr.cp.a)) < rad || abs(z - Complex(fr.cp.b)) < rad) {
    throw InvalidInput("outer parametrix: point inside an excluded edge disk");
  }
}

// Psi_K(z) ztilde(z)^{-K sigma3} and exp(-eta(z)).
void series_sample(const ConformalFrame& fr, const Real& alpha, int K, int r, const Complex& z,
                   Matrix2& G, Complex& em) {
  Complex e = eta(fr, z);
  em = exp(-e);
  Complex zt_inv_K = powi(z, -K) * exp(-Real(K) * e);
  G = outer_psi(fr, alpha, K, r, z) * Matrix2::diag_pow(zt_inv_K);
}

template <class T>
std::vector<T> taylor_from_samples(const std::vector<T>& f, const Real& rho, int jmax) {
  const int n = static_cast<int>(f.size());
  std::vector<T> c(jmax + 1);
  for (int j = 0; j <= jmax; ++j) {
    T acc{};
    for (int k = 0; k < n; ++k) {
      Complex w = polar(Real(1), -2 * pi() * Real(j) * Real(k) / Real(n));
      acc += f[k] * w;
    }
    acc *= Complex(Real(1) / (Real(n) * pow(rho, j)));
    c[j] = acc;
  }
  return c;
}

Real mag(const Complex& z) { return abs(z); }
Real mag(const Matrix2& m) { return norm(m); }

}  // namespace

// ---- Szego function -------------------------------------------------------

Real szego_infinity(const ConformalFrame& fr, const Real& alpha) {
  return pow(-fr.t0 * (fr.cp.b - fr.cp.a) / 4, alpha / 2);
}

Complex szego(const ConformalFrame& fr, const Real& alpha, const Complex& z) {
  if (z.im == 0 && z.re >= fr.cp.a && z.re <= fr.cp.b) {
    throw InvalidInput("szego: z on the cut; use the boundary variant");
  }
  return szego_of_t(fr, alpha, t_of_z(fr.cp, z));
}

Complex szego_boundary(const ConformalFrame& fr, const Real& alpha, const Real& x, int side) {
  return szego_of_t(fr, alpha, t_boundary(fr.cp, x, side));
}

// ---- Outer parametrix -----------------------------------------------------

Real edge_exclusion_radius(const ConformalFrame& fr) { return (fr.cp.b - fr.cp.a) / 20; }

Matrix2 outer_psi(const ConformalFrame& fr, const Real& alpha, int K, int r, const Complex& z) {
  check_edges(fr, z);
  if (z.im == 0 && z.re >= fr.cp.a && z.re <= fr.cp.b) {
    throw InvalidInput("outer_psi: z on the cut; use the boundary variant");
  }
  return psi_of_t(fr, alpha, K, r, t_of_z(fr.cp, z));
}

Matrix2 outer_psi_boundary(const ConformalFrame& fr, const Real& alpha, int K, int r,
                           const Real& x, int side) {
  check_edges(fr, Complex(x));
  return psi_of_t(fr, alpha, K, r, t_boundary(fr.cp, x, side));
}

OuterSeries outer_series(const ConformalFrame& fr, const Real& alpha, int K, int r, int jmax) {
  if (K < 0 || jmax < 1) throw InvalidInput("outer_series: need K >= 0 and jmax >= 1");
  OuterSeries s;
  s.K = K;
  s.r = r;
  s.alpha = alpha;
  s.radius = std::min(Real(fr.disk_radius / 4), Real(fr.cp.a / 8));

  int n = 32;
  while (n < 4 * (jmax + 2)) n *= 2;
  std::vector<Matrix2> G(n);
  std::vector<Complex> E(n);
  auto sample = [&](int k, int count) {
    Complex z = polar(s.radius, 2 * pi() * Real(k) / Real(count));
    series_sample(fr, alpha, K, r, z, G[k], E[k]);
  };
  for (int k = 0; k < n; ++k) sample(k, n);

  const Real tol = tenth_power(static_cast<int>(current_digits()) - 8);
  std::vector<Matrix2> phi = taylor_from_samples(G, s.radius, jmax);
  std::vector<Complex> em = taylor_from_samples(E, s.radius, jmax + 1);
  for (;;) {
    if (n > 8192) throw NumericalFailure("outer_series: Taylor coefficients did not settle");
    const int m = 2 * n;
    std::vector<Matrix2> G2(m);
    std::vector<Complex> E2(m);
    for (int k = 0; k < n; ++k) {
      G2[2 * k] = G[k];
      E2[2 * k] = E[k];
    }
    G.swap(G2);
    E.swap(E2);
    for (int k = 1; k < m; k += 2) sample(k, m);
    n = m;
    std::vector<Matrix2> phi2 = taylor_from_samples(G, s.radius, jmax);
    std::vector<Complex> em2 = taylor_from_samples(E, s.radius, jmax + 1);
    Real scale_g = 0, scale_e = 0, diff_g = 0, diff_e = 0;
    for (int j = 0; j <= jmax; ++j) {
      Real rj = pow(s.radius, j);
      scale_g = std::max(scale_g, Real(mag(phi2[j]) * rj));
      diff_g = std::max(diff_g, Real(mag(phi2[j] - phi[j]) * rj));
    }
    for (int j = 0; j <= jmax + 1; ++j) {
      Real rj = pow(s.radius, j);
      scale_e = std::max(scale_e, Real(mag(em2[j]) * rj));
      diff_e = std::max(diff_e, Real(mag(em2[j] - em[j]) * rj));
    }
    phi.swap(phi2);
    em.swap(em2);
    if (diff_g <= tol * scale_g && diff_e <= tol * scale_e) break;
  }
  s.nodes = n;
  s.phi = std::move(phi);
  s.exp_minus_eta = std::move(em);
  return s;
}

// ---- Regimes and the nilpotent correction ---------------------------------

int nearest_K(const Real& kappa) {
  if (!(kappa > 0)) return 0;
  Real f = floor(kappa);
  int K = static_cast<int>(f);
  if (kappa - f >= Real(1) / 2) ++K;
  return K;
}

Matrix2 nilpotent_M(const ConformalFrame& fr, const MicroModel& mm, int K, const Real& delta,
                    const Real& N) {
  if (delta == 0 || (K == 0 && delta < 0)) return Matrix2::zero();
  if (K > mm.Kmax) throw InvalidInput("nilpotent_M: micro model degree too small");
  const Complex tpi = two_pi_i();
  const Real aK = mm.subleading[K];
  // X = N^{2 gamma delta} / Ctilde0^{2 gamma K}
  const Real X = pow(N, 2 * fr.gamma * delta) / pow(fr.Ctilde0, 2 * fr.gamma * K);
  if (delta > 0) {
    const Real& etaK = mm.norms[K];
    return {Complex(aK), Complex(-etaK * X) / tpi, tpi * Complex(aK * aK / (etaK * X)),
            Complex(-aK)};
  }
  const Real& etaKm1 = mm.norms[K - 1];
  return {Complex(aK), Complex(etaKm1 * aK * aK * X) / tpi, -tpi / Complex(etaKm1 * X),
          Complex(-aK)};
}

// ---- Parametrix set -------------------------------------------------------

std::vector<Matrix2> ab_coefficients(const OuterSeries& series, const Matrix2& Mt, int jmax) {
  if (jmax + 1 >= static_cast<int>(series.exp_minus_eta.size())) {
    throw InvalidInput("ab_coefficients: series too short");
  }
  std::vector<Matrix2> ab(jmax + 1);
  for (int j = 0; j <= jmax; ++j) {
    Matrix2 acc = series.phi[j];
    for (int i = 0; i <= j; ++i) {
      acc -= series.phi[i] * Mt * series.exp_minus_eta[j - i + 1];
    }
    ab[j] = acc;
  }
  return ab;
}

Matrix2 schlesinger_F(const Matrix2& AB0, const Matrix2& AB1, const Matrix2& Mt) {
  if (norm(Mt) == 0) return Matrix2::zero();
  Matrix2 den = AB0 - AB1 * Mt;
  return AB0 * Mt * den.inverse();
}

ParametrixSet build_parametrix_explicit(const ConformalFrame& fr, const MicroModel& mm, int K,
                                        const Real& delta, const Real& N, int r,
                                        const OuterSeries& series, bool corrected) {
  if (K < 0) throw InvalidInput("parametrix: K must be >= 0");
  if (!(N > 0)) throw InvalidInput("parametrix: N must be positive");
  if (K > 0 && !(abs(delta) <= Real(1) / 2)) {
    throw InvalidInput("parametrix: need |delta| <= 1/2 for K >= 1");
  }
  if (K == 0 && delta > Real(1) / 2) throw InvalidInput("parametrix: need delta <= 1/2 for K = 0");
  if (K > mm.Kmax) throw InvalidInput("parametrix: micro model degree too small");
  if (series.K != K || series.r != r || series.alpha != mm.alpha) {
    throw InvalidInput("parametrix: series data does not match (K, r, alpha)");
  }
  ParametrixSet set;
  set.frame = fr;
  set.K = K;
  set.delta = delta;
  set.kappa = Real(K) + delta;
  set.N = N;
  set.r = r;
  set.alpha = mm.alpha;
  set.corrected = corrected;
  set.series = series;
  set.M = corrected ? nilpotent_M(fr, mm, K, delta, N) : Matrix2::zero();
  set.Mt = set.M * Complex(Real(1) / zeta_scale(fr, N));
  set.AB = ab_coefficients(series, set.Mt, static_cast<int>(series.phi.size()) - 1);
  set.F = schlesinger_F(set.AB[0], set.AB[1], set.Mt);
  const Complex tpi = two_pi_i();
  set.uK = Complex(mm.norms[K] / pow(fr.Ctilde0, fr.gamma * (2 * K + 1))) / tpi;
  if (K >= 1) set.lKm1 = tpi * Complex(pow(fr.Ctilde0, fr.gamma * (2 * K - 1)) / mm.norms[K - 1]);
  return set;
}

ParametrixSet build_parametrix_explicit(const ConformalFrame& fr, const MicroModel& mm, int K,
                                        const Real& delta, const Real& N, int r, int jmax,
                                        bool corrected) {
  return build_parametrix_explicit(fr, mm, K, delta, N, r,
                                   outer_series(fr, mm.alpha, K, r, jmax), corrected);
}

ParametrixSet build_parametrix(const ConformalFrame& fr, const MicroModel& mm,
                               const Real& kappa, const Real& N, int r, int jmax,
                               bool corrected) {
  int K = nearest_K(kappa);
  return build_parametrix_explicit(fr, mm, K, kappa - K, N, r, jmax, corrected);
}

// ---- Local parametrix -----------------------------------------------------

namespace {

Matrix2 dress_H(const ParametrixSet& set, const Matrix2& Y) {
  const ConformalFrame& fr = set.frame;
  Real lam = pow(set.N, fr.gamma * set.delta) / pow(fr.Ctilde0, fr.gamma * set.K);
  Real right = pow(set.N, -set.kappa * fr.gamma);
  return Matrix2::diag_pow(lam) * Y * Matrix2::diag_pow(right);
}

Matrix2 Y_model(const ParametrixSet& set, const MicroModel& mm, const Complex& zeta,
                const std::vector<Complex>& C) {
  const int K = set.K;
  if (K == 0) return {Complex(1), C[0], Complex(0), Complex(1)};
  Complex c = -two_pi_i() / Complex(mm.norms[K - 1]);
  return {micro_poly(mm, K, zeta), C[K], c * micro_poly(mm, K - 1, zeta), c * C[K - 1]};
}

Matrix2 R_from_H(const ParametrixSet& set, const Complex& zeta, const Matrix2& H) {
  Complex zt = zeta / Complex(zeta_scale(set.frame, set.N));
  Matrix2 left = Matrix2::diag_pow(powi(zt, -set.K));
  if (norm(set.M) == 0) return left * H;
  return left * (Matrix2::identity() - set.M * (Complex(1) / zeta)) * H;
}

}  // namespace

Matrix2 local_H(const ParametrixSet& set, const MicroModel& mm, const Complex& zeta) {
  int lo = std::max(set.K - 1, 0);
  std::vector<Complex> C = micro_cauchy_range(mm, lo, set.K, zeta);
  return dress_H(set, Y_model(set, mm, zeta, C));
}

Matrix2 local_H_boundary(const ParametrixSet& set, const MicroModel& mm, const Real& x,
                         int side) {
  int lo = std::max(set.K - 1, 0);
  std::vector<Complex> C = micro_cauchy_boundary_range(mm, lo, set.K, x, side);
  return dress_H(set, Y_model(set, mm, Complex(x), C));
}

Matrix2 local_R(const ParametrixSet& set, const MicroModel& mm, const Complex& zeta) {
  return R_from_H(set, zeta, local_H(set, mm, zeta));
}

Matrix2 local_R_boundary(const ParametrixSet& set, const MicroModel& mm, const Real& x,
                         int side) {
  return R_from_H(set, Complex(x), local_H_boundary(set, mm, x, side));
}

Matrix2 outer_kappa(const ParametrixSet& set, const Complex& z) {
  Matrix2 psi = outer_psi(set.frame, set.alpha, set.K, set.r, z);
  if (norm(set.F) == 0) return psi;
  return (Matrix2::identity() + set.F * (Complex(1) / z)) * psi;
}

Matrix2 assemble(const ParametrixSet& set, const MicroModel& mm, const Complex& z) {
  Matrix2 out = outer_kappa(set, z);
  if (abs(z) >= set.frame.disk_radius) return out;
  return out * local_R(set, mm, zeta_of_z(set.frame, set.N, z));
}

Real boundary_residual(const ParametrixSet& set, const MicroModel& mm, int samples) {
  if (samples < 1) throw InvalidInput("boundary_residual: need samples >= 1");
  Real worst = 0;
  for (int k = 0; k < samples; ++k) {
    Complex z = polar(set.frame.disk_radius, 2 * pi() * (Real(k) + Real(1) / 2) / Real(samples));
    Matrix2 psi = outer_kappa(set, z);
    Matrix2 R = local_R(set, mm, zeta_of_z(set.frame, set.N, z));
    Matrix2 E = psi * R * psi.inverse() - Matrix2::identity();
    worst = std::max(worst, norm(E));
  }
  return worst;
}

AnalyticityReport analyticity_defect(const ParametrixSet& set, const MicroModel& mm,
                                     int max_order) {
  const ConformalFrame& fr = set.frame;
  const int n = 128;
  const Real rho = set.series.radius;
  const Real scale = zeta_scale(fr, set.N);
  std::vector<Matrix2> E(n);
  std::vector<Matrix2> col(n);
  Real emax = 0, cmax = 0;
  for (int k = 0; k < n; ++k) {
    Complex z = polar(rho, 2 * pi() * Real(k) / Real(n));
    Matrix2 G;
    Complex em;
    series_sample(fr, set.alpha, set.K, set.r, z, G, em);
    Complex zeta = scale * z / em;
    Matrix2 left = norm(set.F) == 0 ? Matrix2::identity()
                                    : Matrix2::identity() + set.F * (Complex(1) / z);
    Matrix2 e = left * G;
    if (norm(set.M) != 0) e = e * (Matrix2::identity() - set.M * (Complex(1) / zeta));
    E[k] = e;
    // First column of H_K is polynomial in zeta.
    std::vector<Complex> C(set.K + 1);
    Matrix2 H = dress_H(set, Y_model(set, mm, zeta, C));
    col[k] = e * Matrix2{H.m11, Complex(0), H.m21, Complex(0)};
    emax = std::max(emax, norm(e));
    cmax = std::max(cmax, norm(col[k]));
  }
  AnalyticityReport rep;
  rep.meromorphic_factor = 0;
  rep.first_column = 0;
  for (int j = 1; j <= max_order; ++j) {
    Matrix2 ce, cc;
    for (int k = 0; k < n; ++k) {
      Complex w = polar(pow(rho, j), 2 * pi() * Real(j) * Real(k) / Real(n));
      ce += E[k] * w;
      cc += col[k] * w;
    }
    Real rj = pow(rho, -j) / n;
    rep.meromorphic_factor = std::max(rep.meromorphic_factor, Real(norm(ce) * rj / emax));
    rep.first_column = std::max(rep.first_column, Real(norm(cc) * rj / cmax));
  }
  rep.z_minus2_condition = 0;
  if (norm(set.F) != 0) {
    rep.z_minus2_condition =
        norm(set.F * set.AB[0] * set.Mt) / (norm(set.F) * norm(set.AB[0]) * norm(set.Mt));
  }
  return rep;
}

}  // namespace hardedge
