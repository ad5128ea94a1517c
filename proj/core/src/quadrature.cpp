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

#include "hardedge/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <tuple>

namespace hardedge {
namespace {

using boost::multiprecision::abs;
using boost::multiprecision::cos;
using boost::multiprecision::hypot;
using boost::multiprecision::sin;
using boost::multiprecision::sqrt;

std::mutex cache_mutex;

// Precision bits are part of every key: a rule built at 40 digits is not
// reused at 120.
using LegendreKey = std::tuple<int, unsigned>;
using JacobiKey = std::tuple<int, std::string, std::string, unsigned>;

std::map<LegendreKey, QuadratureRule>& legendre_cache() {
  static std::map<LegendreKey, QuadratureRule> cache;
  return cache;
}

std::map<JacobiKey, QuadratureRule>& jacobi_cache() {
  static std::map<JacobiKey, QuadratureRule> cache;
  return cache;
}

// Rounds every entry to the caller's precision (copies keep source precision).
QuadratureRule at_current_precision(const QuadratureRule& r) {
  QuadratureRule out;
  out.nodes.reserve(r.size());
  out.weights.reserve(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    out.nodes.push_back(r.nodes[i] * 1);
    out.weights.push_back(r.weights[i] * 1);
  }
  return out;
}

QuadratureRule build_legendre(int m) {
  QuadratureRule rule;
  rule.nodes.resize(m);
  rule.weights.resize(m);
  const Real tol = tenth_power(static_cast<int>(current_digits()) + 2);
  for (int i = 0; i < (m + 1) / 2; ++i) {
    Real x = std::cos(M_PI * (i + 0.75) / (m + 0.5));
    Real dp;
    for (int it = 0; it < 100; ++it) {
      Real p0 = 1, p1 = x;
      for (int k = 2; k <= m; ++k) {
        Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = std::move(p1);
        p1 = std::move(p2);
      }
      dp = m * (x * p1 - p0) / (x * x - 1);
      Real dx = p1 / dp;
      x -= dx;
      if (abs(dx) < tol) break;
    }
    Real w = 2 / ((1 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[m - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[m - 1 - i] = w;
  }
  if (m % 2 == 1) rule.nodes[m / 2] = 0;
  return rule;
}

QuadratureRule build_jacobi(int m, const Real& alpha, const Real& beta) {
  using boost::multiprecision::pow;
  using boost::multiprecision::tgamma;
  std::vector<Real> diag(m), off(m > 0 ? m - 1 : 0);
  const Real s = alpha + beta;
  for (int k = 0; k < m; ++k) {
    if (k == 0) {
      diag[0] = (beta - alpha) / (s + 2);
    } else {
      diag[k] = (beta * beta - alpha * alpha) / ((2 * k + s) * (2 * k + s + 2));
    }
  }
  for (int k = 1; k < m; ++k) {
    Real bk;
    if (k == 1) {
      bk = 4 * (1 + alpha) * (1 + beta) / ((2 + s) * (2 + s) * (3 + s));
    } else {
      Real t = 2 * k + s;
      bk = 4 * k * (k + alpha) * (k + beta) * (k + s) / (t * t * (t + 1) * (t - 1));
    }
    off[k - 1] = sqrt(bk);
  }
  Real mu0 = pow(Real(2), s + 1) * tgamma(alpha + 1) * tgamma(beta + 1) / tgamma(s + 2);
  TridiagonalEigen eig = tridiagonal_eigen(std::move(diag), std::move(off), true);
  QuadratureRule rule;
  rule.nodes = std::move(eig.values);
  rule.weights.resize(m);
  for (int k = 0; k < m; ++k) rule.weights[k] = mu0 * eig.first[k] * eig.first[k];
  return rule;
}

}  // namespace

QuadratureRule gauss_legendre(int m) {
  if (m < 1) throw InvalidInput("gauss_legendre: m must be positive");
  const unsigned digits = current_digits();
  LegendreKey key{m, digits};
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = legendre_cache().find(key);
    if (it != legendre_cache().end()) return it->second;
  }
  QuadratureRule rule;
  {
    ScopedDigits guard(digits + 10);
    rule = build_legendre(m);
  }
  rule = at_current_precision(rule);
  std::lock_guard<std::mutex> lock(cache_mutex);
  legendre_cache().emplace(key, rule);
  return rule;
}

QuadratureRule gauss_jacobi(int m, const Real& alpha, const Real& beta) {
  if (m < 1) throw InvalidInput("gauss_jacobi: m must be positive");
  if (alpha <= -1 || beta <= -1) throw InvalidInput("gauss_jacobi: exponents must exceed -1");
  const unsigned digits = current_digits();
  JacobiKey key{m, to_string(alpha, digits + 5), to_string(beta, digits + 5), digits};
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = jacobi_cache().find(key);
    if (it != jacobi_cache().end()) return it->second;
  }
  QuadratureRule rule;
  {
    ScopedDigits guard(digits + 10);
    rule = build_jacobi(m, alpha * 1, beta * 1);
  }
  rule = at_current_precision(rule);
  std::lock_guard<std::mutex> lock(cache_mutex);
  jacobi_cache().emplace(key, rule);
  return rule;
}

QuadratureRule gauss_legendre(int m, const Real& lo, const Real& hi) {
  QuadratureRule rule = gauss_legendre(m);
  Real half = (hi - lo) / 2, mid = (hi + lo) / 2;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    rule.nodes[i] = mid + half * rule.nodes[i];
    rule.weights[i] *= half;
  }
  return rule;
}

QuadratureRule gauss_jacobi(int m, const Real& lo, const Real& hi, const Real& alpha,
                            const Real& beta) {
  using boost::multiprecision::pow;
  QuadratureRule rule = gauss_jacobi(m, alpha, beta);
  Real half = (hi - lo) / 2, mid = (hi + lo) / 2;
  Real scale = pow(half, alpha + beta + 1);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    rule.nodes[i] = mid + half * rule.nodes[i];
    rule.weights[i] *= scale;
  }
  return rule;
}

QuadratureRule chebyshev_u(int m, const Real& a, const Real& b) {
  if (m < 1) throw InvalidInput("chebyshev_u: m must be positive");
  QuadratureRule rule;
  rule.nodes.resize(m);
  rule.weights.resize(m);
  Real half = (b - a) / 2, mid = (a + b) / 2;
  Real h = pi() / (m + 1);
  for (int k = 1; k <= m; ++k) {
    Real th = k * h;
    Real sn = sin(th);
    rule.nodes[m - k] = mid + half * cos(th);
    rule.weights[m - k] = h * sn * sn * half * half;
  }
  return rule;
}

TridiagonalEigen tridiagonal_eigen(std::vector<Real> d, std::vector<Real> offdiag,
                                   bool want_first) {
  const int n = static_cast<int>(d.size());
  TridiagonalEigen out;
  if (n == 0) return out;
  if (static_cast<int>(offdiag.size()) != n - 1) {
    throw InvalidInput("tridiagonal_eigen: off-diagonal length must be n-1");
  }
  std::vector<Real> e(n);
  for (int i = 0; i < n - 1; ++i) e[i] = std::move(offdiag[i]);
  e[n - 1] = 0;
  std::vector<Real> z;
  if (want_first) {
    z.assign(n, Real(0));
    z[0] = 1;
  }
  const Real eps = tenth_power(static_cast<int>(current_digits()) + 2);

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        Real dd = abs(d[m]) + abs(d[m + 1]);
        if (abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == 200) throw NumericalFailure("tridiagonal_eigen: QL did not converge");
        Real g = (d[l + 1] - d[l]) / (2 * e[l]);
        Real r = hypot(g, Real(1));
        g = d[m] - d[l] + e[l] / (g + (g >= 0 ? abs(r) : -abs(r)));
        Real s = 1, c = 1, p = 0;
        int i;
        bool deflated = false;
        for (i = m - 1; i >= l; --i) {
          Real f = s * e[i];
          Real b = c * e[i];
          r = hypot(f, g);
          e[i + 1] = r;
          if (r == 0) {
            d[i + 1] -= p;
            e[m] = 0;
            deflated = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (want_first) {
            Real zf = z[i + 1];
            z[i + 1] = s * z[i] + c * zf;
            z[i] = c * z[i] - s * zf;
          }
        }
        if (deflated) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0;
      }
    } while (m != l);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) { return d[i] < d[j]; });
  out.values.reserve(n);
  for (int i : order) out.values.push_back(d[i]);
  if (want_first) {
    out.first.reserve(n);
    for (int i : order) out.first.push_back(z[i]);
  }
  return out;
}

QuadratureRule golub_welsch(const std::vector<Real>& alpha, const std::vector<Real>& beta,
                            const Real& mu0) {
  const std::size_t m = alpha.size();
  if (beta.size() + 1 < m) throw InvalidInput("golub_welsch: need m-1 off-diagonal entries");
  std::vector<Real> off(m > 0 ? m - 1 : 0);
  for (std::size_t k = 1; k < m; ++k) off[k - 1] = sqrt(beta[k - 1]);
  TridiagonalEigen eig = tridiagonal_eigen(alpha, std::move(off), true);
  QuadratureRule rule;
  rule.nodes = std::move(eig.values);
  rule.weights.resize(m);
  for (std::size_t k = 0; k < m; ++k) rule.weights[k] = mu0 * eig.first[k] * eig.first[k];
  return rule;
}

}  // namespace hardedge
