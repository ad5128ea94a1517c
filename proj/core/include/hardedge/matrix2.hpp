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

#include <string>

#include "hardedge/numeric.hpp"

namespace hardedge {

// 2x2 complex matrix, row-major entries m11 m12 / m21 m22.
struct Matrix2 {
  Complex m11, m12, m21, m22;

  static Matrix2 identity() { return {Complex(1), Complex(0), Complex(0), Complex(1)}; }
  static Matrix2 zero() { return {}; }
  static Matrix2 sigma3() { return {Complex(1), Complex(0), Complex(0), Complex(-1)}; }
  // diag(s, 1/s), i.e. s^{sigma3}.
  static Matrix2 diag_pow(const Complex& s) {
    return {s, Complex(0), Complex(0), Complex(1) / s};
  }
  static Matrix2 diag(const Complex& d1, const Complex& d2) {
    return {d1, Complex(0), Complex(0), d2};
  }

  Matrix2& operator+=(const Matrix2& o) {
    m11 += o.m11;
    m12 += o.m12;
    m21 += o.m21;
    m22 += o.m22;
    return *this;
  }
  Matrix2& operator-=(const Matrix2& o) {
    m11 -= o.m11;
    m12 -= o.m12;
    m21 -= o.m21;
    m22 -= o.m22;
    return *this;
  }
  Matrix2& operator*=(const Complex& s) {
    m11 *= s;
    m12 *= s;
    m21 *= s;
    m22 *= s;
    return *this;
  }
  Matrix2 operator-() const { return {-m11, -m12, -m21, -m22}; }

  Complex det() const { return m11 * m22 - m12 * m21; }
  Complex trace() const { return m11 + m22; }
  // Throws DegenerateConfiguration when the determinant vanishes.
  Matrix2 inverse() const;
  // Inverse of a unimodular matrix without dividing by det.
  Matrix2 adjugate() const { return {m22, -m12, -m21, m11}; }
};

inline Matrix2 operator+(Matrix2 a, const Matrix2& b) { return a += b; }
inline Matrix2 operator-(Matrix2 a, const Matrix2& b) { return a -= b; }
inline Matrix2 operator*(Matrix2 a, const Complex& s) { return a *= s; }
inline Matrix2 operator*(const Complex& s, Matrix2 a) { return a *= s; }
Matrix2 operator*(const Matrix2& a, const Matrix2& b);

// Max absolute entry.
Real norm(const Matrix2& m);
std::string to_string(const Matrix2& m, int digits = 12);

}  // namespace hardedge
