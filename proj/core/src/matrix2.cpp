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

#include "hardedge/matrix2.hpp"

#include <algorithm>

namespace hardedge {

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
  return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
          a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}

Matrix2 Matrix2::inverse() const {
  Complex d = det();
  if (d.re == 0 && d.im == 0) throw DegenerateConfiguration("Matrix2::inverse: singular matrix");
  Complex inv = Complex(1) / d;
  return {m22 * inv, -m12 * inv, -m21 * inv, m11 * inv};
}

Real norm(const Matrix2& m) {
  return std::max({abs(m.m11), abs(m.m12), abs(m.m21), abs(m.m22)});
}

std::string to_string(const Matrix2& m, int digits) {
  return "[[" + to_string(m.m11, digits) + ", " + to_string(m.m12, digits) + "], [" +
         to_string(m.m21, digits) + ", " + to_string(m.m22, digits) + "]]";
}

}  // namespace hardedge
