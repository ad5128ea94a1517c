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

#include <cmath>

#include "fixtures.hpp"
#include "hardedge/parametrix.hpp"
#include "hardedge/rate_fit.hpp"

namespace hardedge {
namespace {

using testing::TestConfig;
using testing::to_double;

TEST(Szego, BoundaryProductIsWeight) {
  TestConfig t;
  const Real alpha = t.mm.alpha;
  for (const Real& x : {Real(11) / 10, Real(2), Real(29) / 10}) {
    Complex prod = szego_boundary(t.fr, alpha, x, 1) * szego_boundary(t.fr, alpha, x, -1);
    EXPECT_LT(abs(prod - Complex(pow(x, alpha))), tenth_power(35));
  }
  Complex far = szego(t.fr, alpha, Complex(Real(1000000)));
  EXPECT_LT(abs(far - Complex(szego_infinity(t.fr, alpha))), tenth_power(5));
  EXPECT_LT(abs(szego(t.fr, Real(0), Complex(Real(1) / 2, Real(1))) - Complex(1)),
            tenth_power(35));
}

TEST(OuterPsi, UnimodularWithCutJump) {
  TestConfig t;
  const Real alpha = t.mm.alpha;
  for (int K = 0; K <= 2; ++K) {
    for (int k = 0; k < 10; ++k) {
      Complex z = polar(Real(1) + Real(k) / 3, 2 * pi() * (k + Real(1) / 3) / 10);
      EXPECT_LT(abs(outer_psi(t.fr, alpha, K, 0, z).det() - Complex(1)), tenth_power(33));
    }
    Real x(2);
    Matrix2 jump{Complex(0), Complex(pow(x, alpha)), Complex(-pow(x, -alpha)), Complex(0)};
    Matrix2 plus = outer_psi_boundary(t.fr, alpha, K, 1, x, 1);
    Matrix2 minus = outer_psi_boundary(t.fr, alpha, K, 1, x, -1);
    EXPECT_LT(norm(plus - minus * jump), tenth_power(30)) << K;
  }
}

TEST(OuterPsi, BoundedAtHardEdgeAfterDressing) {
  TestConfig t;
  const int K = 2;
  for (int ray = 0; ray < 8; ++ray) {
    Real theta = 2 * pi() * (ray + Real(1) / 2) / 8;
    for (int k = 2; k <= 8; ++k) {
      Complex z = polar(tenth_power(k), theta);
      Matrix2 m = outer_psi(t.fr, t.mm.alpha, K, 0, z) * Matrix2::diag_pow(Complex(1) / powi(z, K));
      EXPECT_LT(norm(m), Real(1000));
    }
  }
}

TEST(Regimes, NearestIntegerAndNilpotency) {
  TestConfig t;
  EXPECT_EQ(nearest_K(Real(-1)), 0);
  EXPECT_EQ(nearest_K(Real(1) / 4), 0);
  EXPECT_EQ(nearest_K(Real(3) / 4), 1);
  EXPECT_EQ(nearest_K(Real(3) / 2), 2);
  EXPECT_EQ(nearest_K(Real(9) / 4), 2);
  for (const Real& delta : {Real(1) / 4, Real(-1) / 4, Real(1) / 2, Real(-1) / 2}) {
    Matrix2 M = nilpotent_M(t.fr, t.mm, 1, delta, Real(1000));
    EXPECT_LT(norm(M * M) / (norm(M) * norm(M)), tenth_power(35));
    ParametrixSet set = build_parametrix_explicit(t.fr, t.mm, 1, delta, Real(1000), 0);
    EXPECT_LT(abs(set.F.trace()), tenth_power(30) * norm(set.F));
    EXPECT_LT(abs(set.F.det()), tenth_power(28) * norm(set.F) * norm(set.F));
  }
  EXPECT_EQ(norm(nilpotent_M(t.fr, t.mm, 1, Real(0), Real(1000))), 0);
}

TEST(Parametrix, NegativeKappaHasNoCorrection) {
  TestConfig t;
  ParametrixSet set = build_parametrix(t.fr, t.mm, Real(-1), Real(1000), 0);
  EXPECT_EQ(set.K, 0);
  EXPECT_EQ(norm(set.F), 0);
  Matrix2 R = local_R(set, t.mm, Complex(Real(-2), Real(1)));
  EXPECT_LT(abs(R.m21), tenth_power(35));
  EXPECT_LT(abs(R.m11 - Complex(1)), tenth_power(35));
}

TEST(Parametrix, IntegerKappaReducesToTaylorData) {
  TestConfig t;
  ParametrixSet set = build_parametrix(t.fr, t.mm, Real(1), Real(1000), 0);
  EXPECT_EQ(norm(set.M), 0);
  EXPECT_EQ(norm(set.F), 0);
  for (std::size_t j = 0; j < set.AB.size(); ++j) {
    EXPECT_LT(norm(set.AB[j] - set.series.phi[j]), tenth_power(35));
  }
}

// Both the [A, B] shift and F carry N^{-gamma (1 - 2|delta|)} = N^{-1/2} once
// the N^{-1} and N^{-3/2} entries of Mt are negligible; four decades give 10^2.
TEST(Parametrix, CorrectionDecayRateInN) {
  TestConfig t;
  OuterSeries s = outer_series(t.fr, t.mm.alpha, 1, 0, 4);
  for (const Real& delta : {Real(1) / 4, Real(-1) / 4}) {
    ParametrixSet lo = build_parametrix_explicit(t.fr, t.mm, 1, delta, Real(1e8), 0, s);
    ParametrixSet hi = build_parametrix_explicit(t.fr, t.mm, 1, delta, Real(1e12), 0, s);
    double gap = to_double(norm(lo.AB[0] - s.phi[0]) / norm(hi.AB[0] - s.phi[0]));
    double f = to_double(norm(lo.F) / norm(hi.F));
    EXPECT_NEAR(std::log10(gap), 2.0, 0.1) << to_double(delta);
    EXPECT_NEAR(std::log10(f), 2.0, 0.1) << to_double(delta);
  }
}

TEST(Parametrix, AnalyticityAtHardEdge) {
  TestConfig t;
  for (double kappa : {0.75, 1.25}) {
    ParametrixSet set = build_parametrix(t.fr, t.mm, Real(kappa), Real(1000), 0);
    AnalyticityReport rep = analyticity_defect(set, t.mm);
    EXPECT_LT(rep.meromorphic_factor, tenth_power(20)) << kappa;
    EXPECT_LT(rep.first_column, tenth_power(20)) << kappa;
  }
}

TEST(Parametrix, AssembledDeterminantIsOne) {
  TestConfig t;
  ParametrixSet set = build_parametrix(t.fr, t.mm, Real(5) / 4, Real(1000), 0);
  for (const Complex& z : {Complex(Real(1) / 10, Real(1) / 10), Complex(Real(-1) / 10, Real(0)),
                           Complex(Real(1) / 2, Real(1))}) {
    EXPECT_LT(abs(assemble(set, t.mm, z).det() - Complex(1)), tenth_power(25));
  }
}

TEST(Parametrix, BoundaryResidualRateAtQuarterDelta) {
  TestConfig t;
  OuterSeries s = outer_series(t.fr, t.mm.alpha, 1, 0, 4);
  std::vector<std::pair<double, double>> pts;
  for (double N : {1e3, 1e4, 1e5}) {
    ParametrixSet set = build_parametrix_explicit(t.fr, t.mm, 1, Real(1) / 4, Real(N), 0, s);
    pts.emplace_back(N, to_double(boundary_residual(set, t.mm, 64)));
  }
  EXPECT_NEAR(rate_fit(pts).slope, -1.5, 0.15);
}

TEST(Parametrix, HalfIntegerWithoutCorrectionDoesNotDecay) {
  TestConfig t;
  OuterSeries s = outer_series(t.fr, t.mm.alpha, 1, 0, 4);
  for (double N : {1e2, 1e4}) {
    ParametrixSet set =
        build_parametrix_explicit(t.fr, t.mm, 1, Real(1) / 2, Real(N), 0, s, false);
    EXPECT_GT(boundary_residual(set, t.mm, 64), Real(1) / 10);
  }
}

}  // namespace
}  // namespace hardedge
