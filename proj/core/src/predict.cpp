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

#include "hardedge/predict.hpp"

#include <limits>

namespace hardedge {

namespace {

Real half() { return Real(1) / 2; }

Complex poly_prime(const MicroModel& mm, int ell, const Complex& xi) {
  const auto& c = mm.coeffs[ell];
  Complex acc(0);
  for (int j = ell; j >= 1; --j) acc = acc * xi + Complex(c[j] * j);
  return acc;
}

Real t0_power(const Real& t0, int n) {
  Real out(1);
  for (int i = 0; i < n; ++i) out *= t0;
  return out;
}

Real tolerance() { return tenth_power(static_cast<int>(current_digits()) - 10); }

// det of two columns (u1, u2), (v1, v2).
Complex det_cols(const Complex& u1, const Complex& u2, const Complex& v1, const Complex& v2) {
  return u1 * v2 - v1 * u2;
}

}  // namespace

EdgeConstants edge_constants(const ConformalFrame& fr, const Real& alpha) {
  const Real q = (fr.cp.b - fr.cp.a) / 4;
  const Real& t0 = fr.t0;
  const Real s = t0 * t0 - 1;
  EdgeConstants ec;
  ec.X = t0 * t0 / (q * s * s);
  ec.D0sq = pow(-t0 * q, alpha) * pow(1 - 1 / (t0 * t0), 2 * alpha);
  return ec;
}

ZeroPrediction predicted_zeros(const ParametrixSet& set, const MicroModel& mm) {
  const ConformalFrame& fr = set.frame;
  const int K = set.K;
  if (K > mm.Kmax) throw InvalidInput("predicted_zeros: micro model degree too small");
  ZeroPrediction zp;
  zp.kappa = set.kappa;
  zp.K = K;
  zp.delta = set.delta;
  zp.N = set.N;
  const Real ad = abs(set.delta);
  zp.convergence_exponent = (set.delta == 0 || ad == half()) ? fr.gamma : 2 * fr.gamma * ad;

  if (K == 0) return zp;  // nothing is attracted to the edge
  if (set.delta > 0) {
    zp.anchored_zeros = micro_zeros(mm, K);
    return zp;
  }

  const Matrix2& phi0 = set.series.phi[0];
  if (abs(phi0.m11) <= tolerance() * norm(phi0)) {
    throw DegenerateConfiguration("predicted_zeros: A^(0)_1 vanishes");
  }
  const Real& etaKm1 = mm.norms[K - 1];
  const Complex ratio = two_pi_i() * Complex(pow(fr.Ctilde0, 2 * fr.gamma * K) / etaKm1) *
                        phi0.m12 / phi0.m11;

  if (set.delta == 0) {
    zp.mixing_lambda = ratio.re;
    zp.anchored_zeros = micro_zeros_mixed(mm, K, ratio.re);
    return zp;
  }

  zp.anchored_zeros = K >= 2 ? micro_zeros(mm, K - 1) : std::vector<Real>{};
  const EdgeConstants ec = edge_constants(fr, mm.alpha);
  const Real growth = 2 * fr.gamma * ad;
  const Real Ng = pow(set.N, growth);
  StrayZero sz;
  sz.ab_route = ratio.re * Ng;
  sz.closed_form = -2 * pi() * pow(fr.Ctilde0, 2 * fr.gamma * K) * ec.D0sq *
                   pow(ec.X, -2 * K) * Ng / (etaKm1 * t0_power(fr.t0, 2 * set.r + 1));
  sz.growth_exponent = growth;
  zp.stray = sz;
  return zp;
}

Complex mixing_coefficient(const ParametrixSet& set) {
  if (set.delta == 0 || norm(set.Mt) == 0) return Complex(0);
  const Matrix2& c0 = set.AB[0];
  const Matrix2& c1 = set.AB[1];
  Complex m;
  if (set.delta > 0) {
    m = -set.Mt.m12 * det_cols(c0.m11, c0.m21, c1.m11, c1.m21);
  } else {
    m = -set.Mt.m21 * det_cols(c1.m12, c1.m22, c0.m12, c0.m22);
  }
  return m / (Complex(1) + m);
}

KernelPrediction kernel_prediction(const ParametrixSet& set, const MicroModel& mm) {
  if (set.K > mm.Kmax) throw InvalidInput("kernel_prediction: micro model degree too small");
  KernelPrediction kp;
  kp.K = set.K;
  kp.mixing = Real(0);
  if (abs(set.delta) != half()) return kp;
  if (set.delta < 0 && set.K == 0) return kp;
  kp.kind = set.delta > 0 ? KernelKind::transitional_plus : KernelKind::transitional_minus;
  kp.mixing = mixing_coefficient(set).re;
  return kp;
}

Complex kernel_bracket(const MicroModel& mm, const KernelPrediction& kp, const Complex& zeta,
                       const Complex& zetap) {
  const int K = kp.K;
  if (K > mm.Kmax) throw InvalidInput("kernel_bracket: micro model degree too small");
  Complex out(0);
  if (K >= 1) {
    const Real& eta = mm.norms[K - 1];
    const Complex d = zeta - zetap;
    if (abs(d) <= tolerance() * (1 + abs(zeta))) {
      out = (poly_prime(mm, K, zeta) * micro_poly(mm, K - 1, zeta) -
             micro_poly(mm, K, zeta) * poly_prime(mm, K - 1, zeta)) /
            Complex(eta);
    } else {
      out = (micro_poly(mm, K, zeta) * micro_poly(mm, K - 1, zetap) -
             micro_poly(mm, K, zetap) * micro_poly(mm, K - 1, zeta)) /
            (Complex(eta) * d);
    }
  }
  if (kp.kind == KernelKind::transitional_plus) {
    out += Complex(kp.mixing / mm.norms[K]) * micro_poly(mm, K, zeta) * micro_poly(mm, K, zetap);
  } else if (kp.kind == KernelKind::transitional_minus) {
    out -= Complex(kp.mixing / mm.norms[K - 1]) * micro_poly(mm, K - 1, zeta) *
           micro_poly(mm, K - 1, zetap);
  }
  return out;
}

Complex micro_dressed_kernel(const MicroModel& mm, const KernelPrediction& kp,
                             const Complex& zeta, const Complex& zetap) {
  const Real ha = mm.alpha / 2;
  const Complex w = pow(zeta, ha) * pow(zetap, ha) *
                    exp(-(micro_potential(mm, zeta) + micro_potential(mm, zetap)) *
                        Complex(half()));
  return w * kernel_bracket(mm, kp, zeta, zetap);
}

KernelValue predicted_kernel(const ParametrixSet& set, const MicroModel& mm, const Complex& zeta,
                             const Complex& zetap, bool dressed) {
  const ConformalFrame& fr = set.frame;
  const KernelPrediction kp = kernel_prediction(set, mm);
  KernelValue kv;
  kv.dressed = dressed;
  if (dressed) {
    kv.value = Complex(zeta_scale(fr, set.N)) * micro_dressed_kernel(mm, kp, zeta, zetap);
    const Real m = abs(kv.value);
    kv.log_magnitude = m == 0 ? -std::numeric_limits<Real>::infinity() : log(m);
    kv.phase = m == 0 ? Real(0) : arg(kv.value);
    return kv;
  }
  if (zeta.im != 0 || zetap.im != 0 || !(zeta.re > 0) || !(zetap.re > 0)) {
    throw InvalidInput("predicted_kernel: raw form needs real positive zeta");
  }
  const Real s = zeta_scale(fr, set.N);
  const Real x = x_of_ztilde(fr, zeta.re / s);
  const Real xp = x_of_ztilde(fr, zetap.re / s);
  const Complex br = kernel_bracket(mm, kp, zeta, zetap);
  const Real m = abs(br);
  const Real& T = fr.cp.T;
  kv.log_magnitude = m == 0 ? -std::numeric_limits<Real>::infinity()
                            : fr.gamma * log(fr.Ctilde0) +
                                  set.N / T * (g_real(fr.cp, x) + g_real(fr.cp, xp)) -
                                  fr.gamma * (2 * set.kappa - 1) * log(set.N) + log(m);
  kv.phase = m == 0 ? Real(0) : arg(br);
  return kv;
}

TransitionalCertificate transitional_certificate(const ParametrixSet& set, const MicroModel& mm) {
  const ConformalFrame& fr = set.frame;
  const int K = set.K;
  if (abs(set.delta) != half()) throw InvalidInput("transitional_certificate: need |delta| = 1/2");
  if (set.delta < 0 && K == 0) throw InvalidInput("transitional_certificate: need K >= 1");
  if (K > mm.Kmax) throw InvalidInput("transitional_certificate: micro model degree too small");
  const EdgeConstants ec = edge_constants(fr, mm.alpha);
  const Real t2r = t0_power(fr.t0, 2 * set.r);
  const Matrix2& c0 = set.AB[0];
  const Matrix2& c1 = set.AB[1];
  TransitionalCertificate tc;
  if (set.delta > 0) {
    tc.value = mm.norms[K] * pow(fr.Ctilde0, -fr.gamma * (2 * K + 1)) * pow(ec.X, 2 * K + 1) *
               t2r / (2 * pi() * ec.D0sq);
    tc.ab_route = set.uK * det_cols(c0.m11, c0.m21, c1.m11, c1.m21);
  } else {
    tc.value = 2 * pi() * pow(fr.Ctilde0, fr.gamma * (2 * K - 1)) * pow(ec.X, 1 - 2 * K) *
               ec.D0sq / (t2r * mm.norms[K - 1]);
    tc.ab_route = set.lKm1 * det_cols(c1.m12, c1.m22, c0.m12, c0.m22);
  }
  tc.relative_gap = abs(tc.ab_route - Complex(tc.value)) / abs(tc.value);
  tc.positive = tc.value > 0;
  return tc;
}

}  // namespace hardedge
