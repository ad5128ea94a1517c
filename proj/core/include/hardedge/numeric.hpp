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

#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>

namespace hardedge {

// Variable-precision real. Arithmetic results take the thread's default
// precision, so every computation runs inside a ScopedDigits.
using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0>,
    boost::multiprecision::et_off>;

// Rejected input: a violated precondition. Maps to exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Quadrature or recurrence did not reach the requested accuracy. Exit code 1.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A linear system or denominator that the construction needs to be
// nonsingular turned out (numerically) singular.
class DegenerateConfiguration : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

// Sets the default decimal precision for new Real values and restores the
// previous one on destruction.
class ScopedDigits {
 public:
  explicit ScopedDigits(unsigned digits);
  ~ScopedDigits();
  ScopedDigits(const ScopedDigits&) = delete;
  ScopedDigits& operator=(const ScopedDigits&) = delete;

 private:
  unsigned saved_;
};

unsigned current_digits();

Real pi();
// 10^(-k) at the current precision.
Real tenth_power(int k);

struct Complex {
  Real re;
  Real im;

  Complex() : re(0), im(0) {}
  Complex(const Real& r) : re(r), im(0) {}  // NOLINT(implicit)
  Complex(int r) : re(r), im(0) {}          // NOLINT(implicit)
  Complex(double r) : re(r), im(0) {}       // NOLINT(implicit)
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Complex& operator*=(const Real& s) {
    re *= s;
    im *= s;
    return *this;
  }
  Complex& operator/=(const Complex& o);
  Complex operator-() const { return {-re, -im}; }
};

inline Complex operator+(Complex a, const Complex& b) { return a += b; }
inline Complex operator-(Complex a, const Complex& b) { return a -= b; }
inline Complex operator*(Complex a, const Complex& b) { return a *= b; }
inline Complex operator*(Complex a, const Real& s) { return a *= s; }
inline Complex operator*(const Real& s, Complex a) { return a *= s; }
inline Complex operator/(Complex a, const Complex& b) { return a /= b; }

inline Complex conj(const Complex& z) { return {z.re, -z.im}; }
inline Real norm2(const Complex& z) { return z.re * z.re + z.im * z.im; }
Real abs(const Complex& z);
// Principal argument in (-pi, pi].
Real arg(const Complex& z);
Complex exp(const Complex& z);
// Principal logarithm.
Complex log(const Complex& z);
// Principal square root (Re >= 0).
Complex sqrt(const Complex& z);
// Principal power exp(p * log z); pow(0, p) = 0 for p > 0.
Complex pow(const Complex& z, const Real& p);
Complex powi(const Complex& z, int n);
Complex polar(const Real& r, const Real& theta);

inline Complex I() { return {Real(0), Real(1)}; }
// 2*pi*i
Complex two_pi_i();

std::string to_string(const Real& x, int digits = 20);
std::string to_string(const Complex& z, int digits = 20);

}  // namespace hardedge
