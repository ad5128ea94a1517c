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

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "hardedge/rate_fit.hpp"
#include "hardedge/schlesinger.hpp"

namespace hardedge {
namespace {

using testing::TestConfig;
using testing::to_double;

Complex C(double x) { return Complex(Real(x)); }

TEST(NilpotentSplit, ZeroMatrix) {
  ScopedDigits d(40);
  auto [M, Mt] = nilpotent_split(Matrix2::zero());
  EXPECT_EQ(norm(M), 0);
  EXPECT_EQ(norm(Mt), 0);
}

TEST(NilpotentSplit, LowerAnchored) {
  ScopedDigits d(40);
  Matrix2 A{C(2), C(3), C(5), C(-2)};
  auto [M, Mt] = nilpotent_split(A);
  Matrix2 M_ref{C(2), Complex(Real(-4) / 5), C(5), C(-2)};
  Matrix2 Mt_ref{C(0), Complex(Real(3) + Real(4) / 5), C(0), C(0)};
  EXPECT_LT(norm(M - M_ref), tenth_power(35));
  EXPECT_LT(norm(Mt - Mt_ref), tenth_power(35));
  EXPECT_LT(abs(M.det()), tenth_power(35));
  EXPECT_LT(abs(Mt.det()), tenth_power(35));
}

TEST(NilpotentSplit, Diagonal) {
  ScopedDigits d(40);
  auto [M, Mt] = nilpotent_split(Matrix2::sigma3());
  Matrix2 M_ref{C(0.5), C(1), C(-0.25), C(-0.5)};
  Matrix2 Mt_ref{C(0.5), C(-1), C(0.25), C(-0.5)};
  EXPECT_LT(norm(M - M_ref), tenth_power(35));
  EXPECT_LT(norm(Mt - Mt_ref), tenth_power(35));
}

TEST(NilpotentSplit, RejectsTrace) {
  ScopedDigits d(40);
  EXPECT_THROW(nilpotent_split(Matrix2::identity()), InvalidInput);
}

TEST(Factorize, IdentitySeries) {
  ScopedDigits d(40);
  MatrixSeries s;
  s.coeffs = {Matrix2::identity(), Matrix2::zero(), Matrix2::zero(), Matrix2::zero()};
  NilpotentFactorization f = factorize(s, 3);
  for (int j = 0; j < 3; ++j) {
    EXPECT_EQ(norm(f.M[j]), 0);
    EXPECT_EQ(norm(f.Mt[j]), 0);
  }
}

TEST(Factorize, FirstOrderMatchesMicroscopicCoefficients) {
  TestConfig t;
  const Real N(1000);
  ParametrixSet set = build_parametrix(t.fr, t.mm, Real(1), N, 0);
  NilpotentFactorization f = factorize(local_series(set, t.mm, 2), 1);
  const int K = 1;
  const Real lam2 = pow(t.fr.Ctilde0, -2 * t.fr.gamma * K);
  const Real aK = t.mm.subleading[K];
  Matrix2 ref{Complex(aK), Complex(-t.mm.norms[K] * lam2) / two_pi_i(),
              -two_pi_i() / Complex(t.mm.norms[K - 1] * lam2), Complex(-aK)};
  // The series runs in 1/ztilde = (Ctilde0 N)^gamma / zeta.
  Matrix2 got = (f.M[0] + f.Mt[0]) * Complex(zeta_scale(t.fr, N));
  EXPECT_LT(norm(got - ref) / norm(ref), tenth_power(30));
}

TEST(Factorize, ReconstructsSeries) {
  TestConfig t;
  ParametrixSet set = build_parametrix(t.fr, t.mm, Real(1), Real(1000), 0);
  const int p = 3;
  MatrixSeries s = local_series(set, t.mm, p + 1);
  NilpotentFactorization f = factorize(s, p);
  MatrixSeries prod = factorization_series(f, p);
  for (int j = 0; j <= p; ++j) {
    EXPECT_LT(norm(prod.coeffs[j] - s.coeffs[j]), tenth_power(30) * (1 + norm(s.coeffs[j])));
  }
  // Sampled: the product minus the truncated series is O(w^{p+1}).
  for (int k = 0; k < 32; ++k) {
    Complex w = polar(Real(1) / (1000 * (k + 1)), Real(k));
    Matrix2 trunc = Matrix2::zero();
    Complex wp(1);
    for (int j = 0; j <= p; ++j) {
      trunc += s.coeffs[j] * wp;
      wp *= w;
    }
    Real scale = norm(s.coeffs[p]) + 1;
    EXPECT_LT(norm(factorization_product(f, w) - trunc), 10 * scale * abs(wp)) << k;
  }
}

TEST(Improve, AnalyticAtHardEdgeDepthTwo) {
  TestConfig t;
  ParametrixSet set = build_parametrix(t.fr, t.mm, Real(1), Real(1000), 0);
  ImprovedParametrix imp = improve(set, t.mm, 2);
  EXPECT_LT(improved_analyticity_defect(imp), tenth_power(20));
  for (const auto& cf : imp.chain.factors) EXPECT_LT(cf.residual, tenth_power(20));
}

TEST(Improve, DepthOneAgreesWithSingleFactorAtQuarterDelta) {
  TestConfig t;
  OuterSeries s = outer_series(t.fr, t.mm.alpha, 1, 0, 4);
  std::vector<double> gaps;
  for (double N : {1e3, 1e4}) {
    ParametrixSet set = build_parametrix_explicit(t.fr, t.mm, 1, Real(1) / 4, Real(N), 0, s);
    ImprovedParametrix imp = improve(set, t.mm, 1);
    Complex z = polar(t.fr.disk_radius, Real(1));
    Matrix2 a = improved_outer(imp, z);
    Matrix2 b = outer_kappa(set, z);
    gaps.push_back(to_double(norm(a - b) / norm(b)));
  }
  EXPECT_LT(gaps[1], gaps[0]);
}

TEST(Improve, DepthScalingAtIntegerKappa) {
  TestConfig t;
  for (int p = 1; p <= 2; ++p) {
    std::vector<std::pair<double, double>> pts;
    for (double N : {1e3, 1e4, 1e5}) {
      ParametrixSet set = build_parametrix(t.fr, t.mm, Real(1), Real(N), 0);
      pts.emplace_back(N, to_double(improved_boundary_residual(improve(set, t.mm, p), t.mm, 64)));
    }
    EXPECT_NEAR(rate_fit(pts).slope, -(p + 1), 0.3) << p;
  }
}

TEST(Improve, RejectsDepth) {
  TestConfig t;
  ParametrixSet set = build_parametrix(t.fr, t.mm, Real(1), Real(1000), 0);
  EXPECT_THROW(improve(set, t.mm, 0), InvalidInput);
  EXPECT_THROW(improve(set, t.mm, 7), InvalidInput);
}

}  // namespace
}  // namespace hardedge
