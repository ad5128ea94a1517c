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

#include <utility>
#include <vector>

#include "hardedge/parametrix.hpp"

namespace hardedge {

// 1 + sum_j Y_j / ztilde^j; coeffs[0] is the identity.
struct MatrixSeries {
  std::vector<Matrix2> coeffs;
  int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

// Pairs (M_j, Mt_j), j = 1..p, stored at index j - 1.
struct NilpotentFactorization {
  std::vector<Matrix2> M;
  std::vector<Matrix2> Mt;
  int p() const { return static_cast<int>(M.size()); }
};

// 1 + F[0]/z + ... + F[j-1]/z^j.
struct ChainFactor {
  int j = 1;
  bool tilde = false;
  std::vector<Matrix2> F;
  Real residual;  // largest negative Laurent coefficient left after the step
};

// Factors in application order: F_1, Ft_1, F_2, Ft_2, ...
struct SchlesingerChain {
  std::vector<ChainFactor> factors;
};

struct ImprovedParametrix {
  ParametrixSet base;
  int p = 1;
  MatrixSeries series;
  NilpotentFactorization factorization;
  SchlesingerChain chain;
};

// ztilde^{K sigma3} R_K ztilde^{-K sigma3} expanded in 1/ztilde up to `order`.
MatrixSeries local_series(const ParametrixSet& set, const MicroModel& mm, int order);

// Traceless A = M + Mt with M^2 = Mt^2 = 0: lower-anchored when c != 0,
// upper-anchored when c == 0 != b, symmetric when b == c == 0. Entries
// below tol * |A| count as zero (tol < 0 selects the working-precision default).
std::pair<Matrix2, Matrix2> nilpotent_split(const Matrix2& A, const Real& tol = Real(-1));

// Peels (1 + Mt_j w^j)(1 + M_j w^j) off the right of the series, j = 1..p,
// so that series = (1 + O(w^(p+1))) (1 + Mt_p w^p)(1 + M_p w^p) ... (1 + Mt_1 w)(1 + M_1 w)
// and prod_j (1 - M_j w^j)(1 - Mt_j w^j) (j ascending) inverts the factors exactly.
NilpotentFactorization factorize(const MatrixSeries& series, int p);

// (1 + Mt_p w^p)(1 + M_p w^p) ... (1 + Mt_1 w)(1 + M_1 w) with w = 1/ztilde.
Matrix2 factorization_product(const NilpotentFactorization& f, const Complex& w);
// Same truncated to degree `order` in w.
MatrixSeries factorization_series(const NilpotentFactorization& f, int order);

// Solves (1 + F_1/z + ... + F_j/z^j) A(z) (1 - M/ztilde^j) = O(1) for F_1..F_j,
// given Taylor coefficients of A and of (z/ztilde)^j. Throws
// DegenerateConfiguration when the block system is singular.
std::vector<Matrix2> schlesinger_step(const std::vector<Matrix2>& A,
                                      const std::vector<Complex>& zz_j, const Matrix2& M,
                                      int j);

// Depth p in 1..6.
ImprovedParametrix improve(const ParametrixSet& set, const MicroModel& mm, int p);

// Ft_p F_p ... Ft_1 F_1 Psi_K(z).
Matrix2 improved_outer(const ImprovedParametrix& imp, const Complex& z);
// ztilde^{-K sigma3} prod_j (1 - M_j/ztilde^j)(1 - Mt_j/ztilde^j) H_K(zeta).
Matrix2 improved_local(const ImprovedParametrix& imp, const MicroModel& mm, const Complex& zeta);
Real improved_boundary_residual(const ImprovedParametrix& imp, const MicroModel& mm,
                                int samples = 128);
// Largest negative Laurent coefficient at 0 of the meromorphic part of the
// improved composite, relative to its sampled scale.
Real improved_analyticity_defect(const ImprovedParametrix& imp, int max_order = -1);

}  // namespace hardedge
