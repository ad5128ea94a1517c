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

#include "hardedge/numeric.hpp"

#include <boost/math/constants/constants.hpp>

#include <sstream>

namespace hardedge {

ScopedDigits::ScopedDigits(unsigned digits) : saved_(Real::default_precision()) {
  Real::default_precision(digits);
}

ScopedDigits::~ScopedDigits() { Real::default_precision(saved_); }

unsigned current_digits() { return Real::default_precision(); }

Real pi() { return boost::math::constants::pi<Real>(); }

Real tenth_power(int k) { return boost::multiprecision::pow(Real(10), -k); }

Complex& Complex::operator/=(const Complex& o) {
  // Smith's algorithm keeps intermediate magnitudes bounded.
  using boost::multiprecision::abs;
  if (abs(o.re) >= abs(o.im)) {
    Real r = o.im / o.re;
    Real d = o.re + o.im * r;
    Real nr = (re + im * r) / d;
    im = (im - re * r) / d;
    re = std::move(nr);
  } else {
    Real r = o.re / o.im;
    Real d = o.re * r + o.im;
    Real nr = (re * r + im) / d;
    im = (im * r - re) / d;
    re = std::move(nr);
  }
  return *this;
}

Real abs(const Complex& z) { return boost::multiprecision::hypot(z.re, z.im); }

Real arg(const Complex& z) { return boost::multiprecision::atan2(z.im, z.re); }

Complex exp(const Complex& z) {
  Real m = boost::multiprecision::exp(z.re);
  return {m * boost::multiprecision::cos(z.im), m * boost::multiprecision::sin(z.im)};
}

Complex log(const Complex& z) { return {boost::multiprecision::log(abs(z)), arg(z)}; }

Complex sqrt(const Complex& z) {
  using boost::multiprecision::sqrt;
  if (z.re == 0 && z.im == 0) return {};
  Real m = abs(z);
  if (z.re >= 0) {
    Real s = sqrt((m + z.re) / 2);
    return {s, z.im / (2 * s)};
  }
  Real s = sqrt((m - z.re) / 2);
  // The imaginary part carries the sign of Im z (+i for z on the negative axis).
  if (z.im < 0) s = -s;
  return {z.im / (2 * s), s};
}

Complex pow(const Complex& z, const Real& p) {
  if (z.re == 0 && z.im == 0) return {};
  return exp(p * log(z));
}

Complex powi(const Complex& z, int n) {
  if (n < 0) return Complex(1) / powi(z, -n);
  Complex result(1);
  Complex base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

Complex polar(const Real& r, const Real& theta) {
  return {r * boost::multiprecision::cos(theta), r * boost::multiprecision::sin(theta)};
}

Complex two_pi_i() { return {Real(0), 2 * pi()}; }

std::string to_string(const Real& x, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

std::string to_string(const Complex& z, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << "(" << z.re << (z.im < 0 ? " - " : " + ") << boost::multiprecision::abs(z.im) << "i)";
  return os.str();
}

}  // namespace hardedge
