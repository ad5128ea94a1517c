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

#include <vector>

#include "hardedge/numeric.hpp"

namespace hardedge {

struct QuadratureRule {
  std::vector<Real> nodes;
  std::vector<Real> weights;

  std::size_t size() const { return nodes.size(); }
};

// m-point Gauss-Legendre rule on [-1, 1] at the current precision. Cached.
QuadratureRule gauss_legendre(int m);

// m-point Gauss-Jacobi rule on [-1, 1] for the weight (1-u)^alpha (1+u)^beta.
// Built by Golub-Welsch with a few guard digits. Cached.
QuadratureRule gauss_jacobi(int m, const Real& alpha, const Real& beta);

// Gauss-Legendre mapped to [lo, hi].
QuadratureRule gauss_legendre(int m, const Real& lo, const Real& hi);

// Rule for the integral over [lo, hi] of (hi-x)^alpha (x-lo)^beta f(x) dx.
QuadratureRule gauss_jacobi(int m, const Real& lo, const Real& hi,
                            const Real& alpha, const Real& beta);

// Rule for the integral over [a, b] of sqrt((x-a)(b-x)) f(x) dx
// (Gauss-Chebyshev of the second kind, explicit nodes).
QuadratureRule chebyshev_u(int m, const Real& a, const Real& b);

// Eigen-decomposition of a real symmetric tridiagonal matrix by implicit QL.
// `first` holds the first component of each normalized eigenvector.
struct TridiagonalEigen {
  std::vector<Real> values;  // ascending
  std::vector<Real> first;
};

TridiagonalEigen tridiagonal_eigen(std::vector<Real> diag, std::vector<Real> offdiag,
                                   bool want_first = false);

// Gauss rule from monic recurrence coefficients of a measure with total mass
// mu0: alpha[k], k < m, on the diagonal and beta[k-1] = b_k, k = 1..m-1, the
// squared off-diagonal. Nodes are the Jacobi-matrix eigenvalues, weights
// mu0 * v_1^2.
QuadratureRule golub_welsch(const std::vector<Real>& alpha, const std::vector<Real>& beta,
                            const Real& mu0);

}  // namespace hardedge
