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

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>

#include "fixtures.hpp"

namespace hardedge {
namespace {

using testing::TestConfig;
using testing::to_double;

// int_0^1 x^k sqrt((1-x)(3-x)) dx in double precision.
double moment_h(int k) {
  boost::math::quadrature::tanh_sinh<double> ts;
  return ts.integrate([k](double x) { return std::pow(x, k) * std::sqrt((1 - x) * (3 - x)); },
                      0.0, 1.0);
}

TEST(Spectral, ZeroOfQMatchesMomentRatioNu1) {
  TestConfig t;
  EXPECT_NEAR(to_double(t.cp.c), moment_h(1) / moment_h(0), 1e-13);
  EXPECT_GT(t.cp.q, 0);
  EXPECT_GT(t.cp.C0, 0);
  EXPECT_LT(abs(t.cp.q - t.cp.q_laurent), tenth_power(30));
}

TEST(Spectral, ZeroOfQMatchesMomentRatioNu2) {
  ScopedDigits d(40);
  CriticalPotential cp = build_critical_potential(Real(1), Real(3), Real(1), 2);
  EXPECT_NEAR(to_double(cp.c), moment_h(2) / moment_h(1), 1e-13);
}

TEST(Spectral, RejectsInvalidInput) {
  ScopedDigits d(40);
  EXPECT_THROW(build_critical_potential(Real(3), Real(1), Real(1), 1), InvalidInput);
  EXPECT_THROW(build_critical_potential(Real(0), Real(1), Real(1), 1), InvalidInput);
  EXPECT_THROW(build_critical_potential(Real(1), Real(3), Real(-1), 1), InvalidInput);
  EXPECT_THROW(build_critical_potential(Real(1), Real(3), Real(1), 0), InvalidInput);
}

TEST(Spectral, DensityHasMassT) {
  TestConfig t;
  boost::math::quadrature::tanh_sinh<double> ts;
  const CriticalPotential& cp = t.cp;
  double mass = ts.integrate([&cp](double x) { return to_double(density(cp, Real(x))); }, 1.0, 3.0);
  EXPECT_NEAR(mass, 1.0, 1e-12);
}

TEST(Spectral, EffectivePotentialShape) {
  TestConfig t;
  EXPECT_EQ(effective_potential(t.cp, Real(1)), 0);
  EXPECT_EQ(effective_potential(t.cp, Real(2)), 0);
  EXPECT_EQ(effective_potential(t.cp, Real(0)), 0);
  Real half_a = effective_potential(t.cp, Real(1) / 2);
  EXPECT_GT(half_a, 0);
  EXPECT_LT(abs(half_a - effective_potential_from_edge(t.cp, Real(1) / 2)), tenth_power(30));
  EXPECT_GT(effective_potential(t.cp, Real(4)), 0);
  Real x = tenth_power(8);
  EXPECT_LT(abs(effective_potential(t.cp, x) / x - t.cp.C0), tenth_power(6));
}

TEST(Spectral, GFunctionAsymptoticsAndJump) {
  TestConfig t;
  Complex z(Real(0), Real(1000000));
  EXPECT_LT(abs(g_value(t.cp, z) - log(z)), Real(10) / 1000000);
  Complex jump = g_boundary(t.cp, Real(4), 1) - g_boundary(t.cp, Real(4), -1);
  EXPECT_LT(abs(jump - Complex(Real(0), -2 * pi())), tenth_power(30));
}

TEST(Spectral, GRealPartInGapMatchesQuadrature) {
  TestConfig t;
  const CriticalPotential& cp = t.cp;
  boost::math::quadrature::tanh_sinh<double> ts;
  double ref = ts.integrate(
      [&cp](double s) { return to_double(density(cp, Real(s))) * std::log(std::abs(0.1 - s)); },
      1.0, 3.0);
  EXPECT_NEAR(to_double(g_real(cp, Real(1) / 10)), ref, 1e-12);
}

TEST(Spectral, ConformalFrameGeometry) {
  TestConfig t;
  EXPECT_LT(abs(t.fr.t0 - (-2 - sqrt(Real(3)))), tenth_power(35));
  EXPECT_LT(abs(z_of_t(t.cp, Complex(1)) - Complex(3)), tenth_power(35));
  EXPECT_LT(abs(z_of_t(t.cp, Complex(-1)) - Complex(1)), tenth_power(35));
  EXPECT_LT(abs(eta(t.fr, Complex(0))), tenth_power(35));
  EXPECT_LT(t.fr.disk_radius, t.cp.a);
  EXPECT_LT(abs(t.fr.Ctilde0 - 2 * t.cp.C0), tenth_power(35));
  Complex z(Real(1) / 10, Real(1) / 20);
  Real N(1000);
  EXPECT_LT(abs(zeta_of_z(t.fr, N, z) - Complex(zeta_scale(t.fr, N)) * ztilde(t.fr, z)),
            tenth_power(33));
}

TEST(Spectral, XOfZtildeInvertsOnTheWindow) {
  TestConfig t;
  Real x(1);
  x /= 7;
  Real zt = ztilde(t.fr, Complex(x)).re;
  EXPECT_LT(abs(x_of_ztilde(t.fr, zt) - x), tenth_power(33));
}

}  // namespace
}  // namespace hardedge
