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

#include "hardedge/schlesinger.hpp"

#include <algorithm>

namespace hardedge {

namespace {

Real default_tol() { return tenth_power(static_cast<int>(current_digits()) - 10); }

// S <- S (1 - X w^j), truncated to S's length.
void right_peel(std::vector<Matrix2>& S, const Matrix2& X, int j) {
  for (int n = static_cast<int>(S.size()) - 1; n >= j; --n) S[n] -= S[n - j] * X;
}

std::vector<Complex> series_power(const std::vector<Complex>& e, int j, int order) {
  std::vector<Complex> out(order + 1);
  out[0] = Complex(1);
  for (int k = 0; k < j; ++k) {
    std::vector<Complex> next(order + 1);
    for (int n = 0; n <= order; ++n) {
      Complex acc;
      for (int l = 0; l <= n && l < static_cast<int>(e.size()); ++l) acc += e[l] * out[n - l];
      next[n] = acc;
    }
    out.swap(next);
  }
  return out;
}

std::vector<Matrix2> times_scalar_series(const std::vector<Matrix2>& A,
                                         const std::vector<Complex>& s, int order) {
  std::vector<Matrix2> out(order + 1);
  for (int n = 0; n <= order; ++n) {
    Matrix2 acc;
    for (int l = 0; l <= n; ++l) {
      if (l < static_cast<int>(A.size()) && n - l < static_cast<int>(s.size())) {
        acc += A[l] * s[n - l];
      }
    }
    out[n] = acc;
  }
  return out;
}

// Gaussian elimination with partial pivoting; solves G x = rhs column by column.
std::vector<std::vector<Complex>> solve_dense(std::vector<std::vector<Complex>> G,
                                              std::vector<std::vector<Complex>> rhs) {
  const int n = static_cast<int>(G.size());
  const int m = static_cast<int>(rhs.empty() ? 0 : rhs[0].size());
  Real scale = 0;
  for (const auto& row : G)
    for (const auto& v : row) scale = std::max(scale, abs(v));
  if (scale == 0) throw DegenerateConfiguration("schlesinger_step: zero block system");
  const Real tiny = scale * default_tol();
  for (int col = 0; col < n; ++col) {
    int piv = col;
    Real best = abs(G[col][col]);
    for (int r = col + 1; r < n; ++r) {
      Real v = abs(G[r][col]);
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (!(best > tiny)) throw DegenerateConfiguration("schlesinger_step: singular block system");
    std::swap(G[col], G[piv]);
    std::swap(rhs[col], rhs[piv]);
    for (int r = col + 1; r < n; ++r) {
      Complex f = G[r][col] / G[col][col];
      if (f.re == 0 && f.im == 0) continue;
      for (int c = col; c < n; ++c) G[r][c] -= f * G[col][c];
      for (int c = 0; c < m; ++c) rhs[r][c] -= f * rhs[col][c];
    }
  }
  for (int col = n - 1; col >= 0; --col) {
    for (int c = 0; c < m; ++c) {
      Complex acc = rhs[col][c];
      for (int k = col + 1; k < n; ++k) acc -= G[col][k] * rhs[k][c];
      rhs[col][c] = acc / G[col][col];
    }
  }
  return rhs;
}

Complex& entry(Matrix2& m, int r, int c) {
  if (r == 0) return c == 0 ? m.m11 : m.m12;
  return c == 0 ? m.m21 : m.m22;
}

// One chain step: A' = F A (1 - M/ztilde^j) as a Taylor series, plus the
// largest leftover negative coefficient relative to |A_0|.
std::vector<Matrix2> step_update(const std::vector<Matrix2>& A, const std::vector<Complex>& zz,
                                 const Matrix2& M, int j, const std::vector<Matrix2>& F,
                                 Real& residual) {
  const int D = static_cast<int>(A.size()) - 1;
  std::vector<Matrix2> Aj = times_scalar_series(A, zz, D);
  // B_n for n = -j..D-j stored at n + j.
  std::vector<Matrix2> B(D + 1);
  for (int n = -j; n <= D - j; ++n) {
    Matrix2 b = Aj[n + j] * M;
    B[n + j] = n >= 0 ? A[n] - b : -b;
  }
  auto Bat = [&](int n) -> Matrix2 {
    if (n < -j || n > D - j) return Matrix2::zero();
    return B[n + j];
  };
  residual = 0;
  Real fnorm = 0;
  for (const auto& f : F) fnorm = std::max(fnorm, norm(f));
  const Real ref = norm(A[0]) * (1 + fnorm) * (1 + norm(M));
  for (int m = 1; m <= 2 * j; ++m) {
    Matrix2 c = Bat(-m);
    for (int i = 1; i <= j; ++i) c += F[i - 1] * Bat(i - m);
    residual = std::max(residual, Real(norm(c) / ref));
  }
  const int out_order = D - 2 * j;
  if (out_order < 0) throw InvalidInput("schlesinger chain: series too short");
  std::vector<Matrix2> out(out_order + 1);
  for (int k = 0; k <= out_order; ++k) {
    Matrix2 acc = Bat(k);
    for (int i = 1; i <= j; ++i) acc += F[i - 1] * Bat(k + i);
    out[k] = acc;
  }
  return out;
}

Matrix2 chain_factor_value(const ChainFactor& f, const Complex& z) {
  Matrix2 out = Matrix2::identity();
  Complex zi = Complex(1);
  Complex inv = Complex(1) / z;
  for (const auto& Fi : f.F) {
    zi *= inv;
    out += Fi * zi;
  }
  return out;
}

Matrix2 local_product(const NilpotentFactorization& f, const Complex& w) {
  Matrix2 out = Matrix2::identity();
  Complex wj = Complex(1);
  for (int j = 1; j <= f.p(); ++j) {
    wj *= w;
    out = out * (Matrix2::identity() - f.M[j - 1] * wj) * (Matrix2::identity() - f.Mt[j - 1] * wj);
  }
  return out;
}

}  // namespace

MatrixSeries local_series(const ParametrixSet& set, const MicroModel& mm, int order) {
  if (order < 1) throw InvalidInput("local_series: order must be >= 1");
  const int K = set.K;
  if (K > mm.Kmax) throw InvalidInput("local_series: micro model degree too small");
  if (K + order > mm.moment_order) {
    throw InvalidInput("local_series: micro model moment order too small");
  }
  const ConformalFrame& fr = set.frame;
  const Complex tpi = two_pi_i();
  const Real lam = pow(set.N, fr.gamma * set.delta) / pow(fr.Ctilde0, fr.gamma * K);
  const Real lam2 = lam * lam;
  const Real s = zeta_scale(fr, set.N);
  MatrixSeries out;
  out.coeffs.assign(order + 1, Matrix2::zero());
  out.coeffs[0] = Matrix2::identity();
  Real sj = 1;
  for (int j = 1; j <= order; ++j) {
    sj *= s;
    Matrix2 W;
    if (K == 0) {
      W.m12 = Complex(-micro_moment(mm, 0, j - 1)) / tpi;
    } else {
      const Complex c = -tpi / Complex(mm.norms[K - 1]);
      if (j <= K) W.m11 = Complex(mm.coeffs[K][K - j]);
      W.m12 = Complex(-micro_moment(mm, K, K + j - 1)) / tpi;
      if (j <= K) W.m21 = c * Complex(mm.coeffs[K - 1][K - j]);
      W.m22 = Complex(micro_moment(mm, K - 1, K - 1 + j) / mm.norms[K - 1]);
    }
    W.m12 *= lam2;
    W.m21 *= Real(1) / lam2;
    W *= Complex(Real(1) / sj);
    out.coeffs[j] = W;
  }
  return out;
}

std::pair<Matrix2, Matrix2> nilpotent_split(const Matrix2& A, const Real& tol_in) {
  const Real tol = tol_in < 0 ? default_tol() : tol_in;
  const Real n = norm(A);
  if (n == 0) return {Matrix2::zero(), Matrix2::zero()};
  if (abs(A.trace()) > tol * n) throw InvalidInput("nilpotent_split: matrix is not traceless");
  const Complex a = (A.m11 - A.m22) * Complex(Real(1) / 2);
  const Complex& b = A.m12;
  const Complex& c = A.m21;
  Matrix2 M;
  if (abs(c) > tol * n) {
    M = {a, -(a * a) / c, c, -a};
  } else if (abs(b) > tol * n) {
    M = {a, b, -(a * a) / b, -a};
  } else {
    M = {a * Complex(Real(1) / 2), Complex(1), -(a * a) * Complex(Real(1) / 4),
         -a * Complex(Real(1) / 2)};
  }
  Matrix2 Atl{a, b, c, -a};
  return {M, Atl - M};
}

NilpotentFactorization factorize(const MatrixSeries& series, int p) {
  if (p < 1) throw InvalidInput("factorize: p must be >= 1");
  if (series.order() < p) throw InvalidInput("factorize: series shorter than p");
  const Real tol = default_tol();
  std::vector<Matrix2> rest(series.coeffs.begin(), series.coeffs.begin() + p + 1);
  NilpotentFactorization f;
  for (int j = 1; j <= p; ++j) {
    const Matrix2& A = rest[j];
    Real ref = norm(A) + norm(series.coeffs[j]);
    if (abs(A.trace()) > tol * ref * 1000) {
      throw NumericalFailure("factorize: residue is not traceless (precision loss upstream)");
    }
    Matrix2 Atl = A;
    Complex half_tr = A.trace() * Complex(Real(1) / 2);
    Atl.m11 -= half_tr;
    Atl.m22 -= half_tr;
    auto [M, Mt] = nilpotent_split(Atl);
    f.M.push_back(M);
    f.Mt.push_back(Mt);
    right_peel(rest, M, j);
    right_peel(rest, Mt, j);
  }
  return f;
}

Matrix2 factorization_product(const NilpotentFactorization& f, const Complex& w) {
  Matrix2 out = Matrix2::identity();
  Complex wj = Complex(1);
  for (int j = 1; j <= f.p(); ++j) {
    wj *= w;
    out = (Matrix2::identity() + f.Mt[j - 1] * wj) * (Matrix2::identity() + f.M[j - 1] * wj) * out;
  }
  return out;
}

MatrixSeries factorization_series(const NilpotentFactorization& f, int order) {
  MatrixSeries s;
  s.coeffs.assign(order + 1, Matrix2::zero());
  s.coeffs[0] = Matrix2::identity();
  for (int j = 1; j <= f.p(); ++j) {
    for (const Matrix2* X : {&f.M[j - 1], &f.Mt[j - 1]}) {
      // S <- (1 + X w^j) S
      for (int n = order; n >= j; --n) s.coeffs[n] += *X * s.coeffs[n - j];
    }
  }
  return s;
}

std::vector<Matrix2> schlesinger_step(const std::vector<Matrix2>& A,
                                      const std::vector<Complex>& zz_j, const Matrix2& M,
                                      int j) {
  if (j < 1) throw InvalidInput("schlesinger_step: j must be >= 1");
  if (static_cast<int>(A.size()) < 2 * j || static_cast<int>(zz_j.size()) < 2 * j) {
    throw InvalidInput("schlesinger_step: need 2j Taylor coefficients");
  }
  if (norm(M) == 0) return std::vector<Matrix2>(j, Matrix2::zero());
  std::vector<Matrix2> Aj = times_scalar_series(A, zz_j, 2 * j - 1);
  const int n = 2 * j;
  // X G = R with X = (F_1, ..., F_j); solved as G^T X^T = R^T.
  std::vector<std::vector<Complex>> GT(n, std::vector<Complex>(n));
  std::vector<std::vector<Complex>> RT(n, std::vector<Complex>(2));
  for (int r = 1; r <= j; ++r) {
    for (int c = 1; c <= j; ++c) {
      Matrix2 blk = (r + c >= j + 1 ? A[r + c - j - 1] : Matrix2::zero()) - Aj[r + c - 1] * M;
      for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v) GT[2 * (c - 1) + v][2 * (r - 1) + u] = entry(blk, u, v);
    }
  }
  for (int c = 1; c <= j; ++c) {
    Matrix2 rhs = Aj[c - 1] * M;
    for (int u = 0; u < 2; ++u)
      for (int v = 0; v < 2; ++v) RT[2 * (c - 1) + v][u] = entry(rhs, u, v);
  }
  auto XT = solve_dense(std::move(GT), std::move(RT));
  std::vector<Matrix2> F(j);
  for (int i = 1; i <= j; ++i) {
    for (int u = 0; u < 2; ++u)
      for (int v = 0; v < 2; ++v) entry(F[i - 1], u, v) = XT[2 * (i - 1) + v][u];
  }
  return F;
}

ImprovedParametrix improve(const ParametrixSet& set, const MicroModel& mm, int p) {
  if (p < 1 || p > 6) throw InvalidInput("improve: depth p must be in 1..6");
  ImprovedParametrix imp;
  imp.base = set;
  imp.p = p;
  imp.series = local_series(set, mm, p + 1);
  imp.factorization = factorize(imp.series, p);
  const int D = 2 * p * (p + 1) + 2 * p + 4;
  if (static_cast<int>(set.series.phi.size()) - 1 < D) {
    imp.base.series = outer_series(set.frame, set.alpha, set.K, set.r, D);
  }
  const OuterSeries& os = imp.base.series;
  std::vector<Matrix2> A(os.phi.begin(), os.phi.begin() + D + 1);
  for (int j = 1; j <= p; ++j) {
    std::vector<Complex> zz = series_power(os.exp_minus_eta, j, static_cast<int>(A.size()) - 1);
    for (int t = 0; t < 2; ++t) {
      const Matrix2& M = t == 0 ? imp.factorization.M[j - 1] : imp.factorization.Mt[j - 1];
      ChainFactor cf;
      cf.j = j;
      cf.tilde = t == 1;
      cf.F = schlesinger_step(A, zz, M, j);
      A = step_update(A, zz, M, j, cf.F, cf.residual);
      zz.resize(A.size());
      imp.chain.factors.push_back(std::move(cf));
    }
  }
  return imp;
}

Matrix2 improved_outer(const ImprovedParametrix& imp, const Complex& z) {
  const ParametrixSet& b = imp.base;
  Matrix2 P = outer_psi(b.frame, b.alpha, b.K, b.r, z);
  for (const auto& f : imp.chain.factors) P = chain_factor_value(f, z) * P;
  return P;
}

Matrix2 improved_local(const ImprovedParametrix& imp, const MicroModel& mm, const Complex& zeta) {
  const ParametrixSet& b = imp.base;
  Complex zt = zeta / Complex(zeta_scale(b.frame, b.N));
  Matrix2 H = local_H(b, mm, zeta);
  return Matrix2::diag_pow(powi(zt, -b.K)) * local_product(imp.factorization, Complex(1) / zt) * H;
}

Real improved_boundary_residual(const ImprovedParametrix& imp, const MicroModel& mm,
                                int samples) {
  if (samples < 1) throw InvalidInput("improved_boundary_residual: need samples >= 1");
  const ConformalFrame& fr = imp.base.frame;
  Real worst = 0;
  for (int k = 0; k < samples; ++k) {
    Complex z = polar(fr.disk_radius, 2 * pi() * (Real(k) + Real(1) / 2) / Real(samples));
    Matrix2 psi = improved_outer(imp, z);
    Matrix2 R = improved_local(imp, mm, zeta_of_z(fr, imp.base.N, z));
    worst = std::max(worst, norm(psi * R * psi.inverse() - Matrix2::identity()));
  }
  return worst;
}

Real improved_analyticity_defect(const ImprovedParametrix& imp, int max_order) {
  const ParametrixSet& b = imp.base;
  const ConformalFrame& fr = b.frame;
  const int order = max_order < 0 ? imp.p * (imp.p + 1) + 2 : max_order;
  const int n = 256;
  const Real rho = b.series.radius;
  std::vector<Matrix2> E(n);
  Real emax = 0;
  for (int k = 0; k < n; ++k) {
    Complex z = polar(rho, 2 * pi() * Real(k) / Real(n));
    Complex zt = ztilde(fr, z);
    Matrix2 e = improved_outer(imp, z) * Matrix2::diag_pow(powi(zt, -b.K)) *
                local_product(imp.factorization, Complex(1) / zt);
    E[k] = e;
    emax = std::max(emax, norm(e));
  }
  Real worst = 0;
  for (int j = 1; j <= order; ++j) {
    Matrix2 c;
    for (int k = 0; k < n; ++k) c += E[k] * polar(pow(rho, j), 2 * pi() * Real(j * k) / Real(n));
    worst = std::max(worst, Real(norm(c) * pow(rho, -j) / (n * emax)));
  }
  return worst;
}

}  // namespace hardedge
