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

// Acceptance harness: one PASS/FAIL line per criterion with the measured
// values. Usage: hardedge_acceptance [criterion ...] (default: all).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/special_functions/binomial.hpp>

#include "hardedge/micro.hpp"
#include "hardedge/oracle.hpp"
#include "hardedge/parametrix.hpp"
#include "hardedge/predict.hpp"
#include "hardedge/rate_fit.hpp"
#include "hardedge/schlesinger.hpp"
#include "hardedge/spectral.hpp"

namespace hardedge {
namespace {

// Pinned tolerances.
constexpr int kSzegoJumpExp = 30;        // 1e-30
constexpr double kSzegoFarTol = 1e-5;
constexpr int kOuterJumpExp = 25;        // 1e-25
constexpr double kOuterBound = 1e3;
constexpr int kAnalyticityExp = 20;      // 1e-20
constexpr double kResidualSlopeTol = 0.15;
constexpr double kNonDecayFloor = 0.1;
constexpr double kDepthSlopeTol = 0.2;
constexpr int kLaguerreExp = 25;         // 1e-25
constexpr double kOracleSlopeTol = 0.2;
constexpr double kStrayRatioTol = 0.25;
// gap(1e4) <= 3 C 1e4^-gamma with C = gap(1e6) 1e6^gamma: N = 1e4 already on the
// asymptotic O(N^-gamma) line.
constexpr double kDualRouteFactor = 3.0;

const std::vector<int> kOracleGrid{16, 32, 64, 128};

double to_d(const Real& x) { return x.convert_to<double>(); }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Config {
  CriticalPotential cp;
  ConformalFrame fr;
  MicroModel mm;
};

Config make_config(const Real& a, const Real& b, int nu, const Real& alpha, int Kmax = 5) {
  Config c{build_critical_potential(a, b, Real(1), nu), {}, {}};
  c.fr = conformal_frame(c.cp);
  c.mm = micro_model(alpha, nu, {}, Kmax);
  return c;
}

const Config& test_config() {
  static const Config c = make_config(Real(1), Real(3), 1, Real(1) / 2);
  return c;
}

const OracleRun& oracle(const Real& kappa, int N) {
  static std::map<std::pair<double, int>, OracleRun> cache;
  auto key = std::make_pair(to_d(kappa), N);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const Config& c = test_config();
  PerturbationWindow win = make_window(c.fr, kappa, c.mm.alpha, {});
  return cache.emplace(key, finite_n_ops(c.fr, win, N, 0)).first->second;
}

Outcome szego_jump() {
  const Config& c = test_config();
  const Real& alpha = c.mm.alpha;
  QuadratureRule q = gauss_jacobi(64, c.cp.a, c.cp.b, Real(-1) / 2, Real(-1) / 2);
  Real worst(0);
  for (const Real& x : q.nodes) {
    Complex prod = szego_boundary(c.fr, alpha, x, 1) * szego_boundary(c.fr, alpha, x, -1);
    Real xa = pow(x, alpha);
    Real e = abs(prod - Complex(xa)) / xa;
    if (e > worst) worst = e;
  }
  Real far = abs(szego(c.fr, alpha, Complex(Real(1000000))) -
                 Complex(pow((c.cp.b - c.cp.a) / 4, alpha / 2)));
  Real far_own = abs(szego(c.fr, alpha, Complex(Real(1000000))) -
                     Complex(szego_infinity(c.fr, alpha)));
  Outcome o;
  o.pass = worst < tenth_power(kSzegoJumpExp) && far < Real(kSzegoFarTol);
  o.detail = "max jump rel " + fmt(to_d(worst)) + "; |D(1e6) - ((b-a)/4)^(alpha/2)| " +
             fmt(to_d(far)) + "; |D(1e6) - szego_infinity| " + fmt(to_d(far_own)) +
             " (szego_infinity " + fmt(to_d(szego_infinity(c.fr, alpha))) + ")";
  return o;
}

Outcome outer_parametrix() {
  const Config& c = test_config();
  const Real& alpha = c.mm.alpha;
  // The outer model is not used inside the soft-edge disks.
  const Real rad = edge_exclusion_radius(c.fr);
  QuadratureRule q = gauss_legendre(32, c.cp.a + rad, c.cp.b - rad);
  Real jump(0), det(0), bound(0);
  for (int K = 0; K <= 2; ++K) {
    for (int r = 0; r <= 1; ++r) {
      for (const Real& x : q.nodes) {
        Matrix2 J{Complex(0), Complex(pow(x, alpha)), Complex(-pow(x, -alpha)), Complex(0)};
        Matrix2 plus = outer_psi_boundary(c.fr, alpha, K, r, x, 1);
        Matrix2 minus = outer_psi_boundary(c.fr, alpha, K, r, x, -1);
        Real e = norm(plus - minus * J) / norm(plus);
        if (e > jump) jump = e;
      }
    }
    for (int k = 0; k < 32; ++k) {
      Complex z = polar(Real(1) + Real(k) / 8, 2 * pi() * (k + Real(1) / 3) / 32);
      if (abs(z - Complex(c.cp.a)) < rad || abs(z - Complex(c.cp.b)) < rad) continue;
      Real e = abs(outer_psi(c.fr, alpha, K, 0, z).det() - Complex(1));
      if (e > det) det = e;
    }
    for (int ray = 0; ray < 8; ++ray) {
      Real theta = 2 * pi() * (ray + Real(1) / 2) / 8;
      for (int k = 2; k <= 10; ++k) {
        Complex z = polar(tenth_power(k), theta);
        Real n = norm(outer_psi(c.fr, alpha, K, 0, z) *
                      Matrix2::diag_pow(Complex(1) / powi(z, K)));
        if (n > bound) bound = n;
      }
    }
  }
  Outcome o;
  o.pass = jump < tenth_power(kOuterJumpExp) && det < tenth_power(kOuterJumpExp) &&
           bound < Real(kOuterBound);
  o.detail = "jump " + fmt(to_d(jump)) + "; |det - 1| " + fmt(to_d(det)) +
             "; max |Psi z^-K sigma3| on rays " + fmt(to_d(bound));
  return o;
}

Outcome outpost_analyticity() {
  const Config& c = test_config();
  Outcome o{true, ""};
  for (double kappa : {0.75, 1.0, 1.25, 1.5}) {
    ParametrixSet set = build_parametrix(c.fr, c.mm, Real(kappa), Real(1000), 0);
    AnalyticityReport rep = analyticity_defect(set, c.mm);
    Real worst = rep.meromorphic_factor > rep.first_column ? rep.meromorphic_factor
                                                           : rep.first_column;
    if (!(worst < tenth_power(kAnalyticityExp))) o.pass = false;
    o.detail += "kappa " + fmt(kappa) + ": " + fmt(to_d(worst)) + "; ";
  }
  return o;
}

Outcome residual_rate() {
  const std::vector<double> grid{1e2, 1e3, 1e4, 1e5};
  Outcome o{true, ""};
  Config nu1 = test_config();
  Config nu2 = make_config(Real(1), Real(3), 2, Real(1) / 2);
  struct Case {
    const Config* c;
    double kappa;
  };
  for (const Case& cs : {Case{&nu1, 1.25}, Case{&nu1, 0.75}, Case{&nu1, 1.0}, Case{&nu2, 1.25}}) {
    const Config& c = *cs.c;
    int K = nearest_K(Real(cs.kappa));
    double delta = std::fabs(cs.kappa - K);
    double gamma = 1.0 / c.cp.nu;
    double expect = -gamma * std::min(1 + 2 * delta, 2 - 2 * delta);
    std::vector<std::pair<double, double>> pts;
    for (double N : grid) {
      ParametrixSet set = build_parametrix(c.fr, c.mm, Real(cs.kappa), Real(N), 0);
      pts.emplace_back(N, to_d(boundary_residual(set, c.mm, 128)));
    }
    double slope = rate_fit(pts).slope;
    bool ok = std::fabs(slope - expect) <= kResidualSlopeTol;
    if (!ok) o.pass = false;
    o.detail += "(nu " + std::to_string(c.cp.nu) + ", kappa " + fmt(cs.kappa) + ") slope " +
                fmt(slope) + " vs " + fmt(expect) + (ok ? "" : " [off]") + "; ";
  }
  const Config& c = nu1;
  OuterSeries s = outer_series(c.fr, c.mm.alpha, 1, 0, 4);
  double lo = 1e300;
  for (double N : grid) {
    ParametrixSet set =
        build_parametrix_explicit(c.fr, c.mm, 1, Real(1) / 2, Real(N), 0, s, false);
    lo = std::min(lo, to_d(boundary_residual(set, c.mm, 128)));
  }
  if (!(lo > kNonDecayFloor)) o.pass = false;
  o.detail += "uncorrected |delta| = 1/2 min residual " + fmt(lo);
  return o;
}

Outcome depth_scaling() {
  const Config& c = test_config();
  const std::vector<double> grid{1e2, 1e3, 1e4, 1e5};
  std::vector<std::vector<double>> res(4);
  Outcome o{true, ""};
  for (double N : grid) {
    ParametrixSet set = build_parametrix(c.fr, c.mm, Real(1), Real(N), 0);
    for (int p = 1; p <= 3; ++p) {
      res[p].push_back(to_d(improved_boundary_residual(improve(set, c.mm, p), c.mm, 128)));
    }
  }
  for (int p = 1; p <= 3; ++p) {
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = 0; i < grid.size(); ++i) pts.emplace_back(grid[i], res[p][i]);
    double slope = rate_fit(pts).slope;
    bool ok = std::fabs(slope + (p + 1)) <= kDepthSlopeTol;
    if (!ok) o.pass = false;
    o.detail += "p " + std::to_string(p) + " slope " + fmt(slope) + (ok ? "" : " [off]") + "; ";
  }
  bool mono = true;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(res[2][i] < res[1][i] && res[3][i] < res[2][i])) mono = false;
  }
  if (!mono) o.pass = false;
  o.detail += std::string("monotone in p: ") + (mono ? "yes" : "no");
  return o;
}

Outcome micro_equivalence() {
  Real worst(0);
  for (const Real& alpha : {Real(0), Real(1) / 2, Real(13) / 10}) {
    MicroModel mm = micro_model(alpha, 1, {}, 8);
    for (int K = 0; K <= 8; ++K) {
      for (int j = 0; j <= K; ++j) {
        Real binom = boost::math::binomial_coefficient<double>(K, j);
        Real sign = (K - j) % 2 == 0 ? Real(1) : Real(-1);
        Real ref = sign * binom * tgamma(K + alpha + 1) / tgamma(j + alpha + 1);
        Real e = abs(mm.coeffs[K][j] - ref) / abs(ref);
        if (e > worst) worst = e;
      }
    }
  }
  return {worst < tenth_power(kLaguerreExp), "max coefficient rel error " + fmt(to_d(worst))};
}

std::string zeros_text(const std::vector<Real>& z) {
  std::string s = "{";
  for (std::size_t i = 0; i < z.size(); ++i) s += (i ? ", " : "") + fmt(to_d(z[i]));
  return s + "}";
}

Outcome colonization() {
  const Real kappa = Real(5) / 4;
  Outcome o;
  std::string counts;
  int threshold = -1;
  for (int N : kOracleGrid) {
    const OracleRun& run = oracle(kappa, N);
    counts += "N " + std::to_string(N) + " " + zeros_text(run.zeros_edge_rescaled) + "; ";
    if (run.zeros_edge_rescaled.size() == 1) {
      if (threshold < 0) threshold = N;
    } else {
      threshold = -1;
    }
  }
  o.detail = counts;
  if (threshold < 0) {
    o.detail += "no threshold with exactly one edge zero";
    return o;
  }
  std::vector<std::pair<double, double>> pts;
  for (int N : kOracleGrid) {
    if (N < threshold) continue;
    double d = std::fabs(to_d(oracle(kappa, N).zeros_edge_rescaled[0]) - 1.5);
    pts.emplace_back(N, d);
  }
  o.detail += "threshold " + std::to_string(threshold);
  if (pts.size() < 3) {
    o.detail += "; too few points above threshold for a fit";
    return o;
  }
  double slope = rate_fit(pts).slope;
  o.pass = std::fabs(slope + 0.5) <= kOracleSlopeTol;
  o.detail += "; slope " + fmt(slope);
  return o;
}

Outcome stray_zero() {
  const Config& c = test_config();
  const Real kappa = Real(3) / 4;
  Outcome o{true, ""};
  std::vector<std::pair<double, double>> pts;
  std::vector<double> ratios;
  for (int N : kOracleGrid) {
    const OracleRun& run = oracle(kappa, N);
    ParametrixSet set = build_parametrix(c.fr, c.mm, kappa, Real(N), 0);
    double closed = to_d(predicted_zeros(set, c.mm).stray->closed_form);
    o.detail += "N " + std::to_string(N) + " edge " + zeros_text(run.zeros_edge_rescaled) +
                " closed " + fmt(closed) + "; ";
    if (run.zeros_edge_rescaled.empty()) {
      o.pass = false;
      continue;
    }
    double z = to_d(run.zeros_edge_rescaled.back());
    pts.emplace_back(N, z);
    ratios.push_back(z / closed);
  }
  if (!o.pass || pts.size() < 3) {
    o.pass = false;
    o.detail += "missing edge zeros";
    return o;
  }
  double slope = rate_fit(pts).slope;
  bool mono = true;
  for (std::size_t i = 1; i < ratios.size(); ++i) {
    if (std::fabs(ratios[i] - 1) > std::fabs(ratios[i - 1] - 1)) mono = false;
  }
  o.pass = std::fabs(slope - 0.5) <= kOracleSlopeTol && mono &&
           std::fabs(ratios.back() - 1) <= kStrayRatioTol;
  o.detail += "slope " + fmt(slope) + "; final ratio " + fmt(ratios.back()) +
              "; monotone " + (mono ? "yes" : "no");
  return o;
}

Outcome dressed_kernel() {
  const Config& c = test_config();
  const Real kappa = Real(5) / 4;
  std::vector<std::pair<double, double>> pts;
  std::string detail;
  for (int N : kOracleGrid) {
    const OracleRun& run = oracle(kappa, N);
    ParametrixSet set = build_parametrix(c.fr, c.mm, kappa, Real(N), 0);
    KernelPrediction kp = kernel_prediction(set, c.mm);
    Real limit = micro_dressed_kernel(c.mm, kp, Complex(Real(1)), Complex(Real(2))).re;
    Real finite = oracle_dressed_kernel(run, Real(1), Real(2));
    double dev = to_d(abs(finite - limit) / abs(limit));
    detail += "N " + std::to_string(N) + " rel dev " + fmt(dev) + "; ";
    pts.emplace_back(N, dev);
  }
  double slope = rate_fit(pts).slope;
  return {std::fabs(slope + 0.5) <= kOracleSlopeTol, detail + "slope " + fmt(slope)};
}

Outcome certificates() {
  Outcome o{true, ""};
  int total = 0, positive = 0, in_regime = 0;
  double worst_gap = 0;
  std::string off;
  for (auto ab : {std::pair<double, double>{1, 3}, {0.5, 2}, {2, 5}}) {
    for (const Real& alpha : {Real(0), Real(1) / 2, Real(13) / 10}) {
      Config c = make_config(Real(ab.first), Real(ab.second), 1, alpha);
      const double gamma = 1.0 / c.cp.nu;
      for (int K = 1; K <= 2; ++K) {
        for (int r = 0; r <= 1; ++r) {
          for (const Real& delta : {Real(1) / 2, Real(-1) / 2}) {
            const double Ns[2] = {1e4, 1e6};
            double gap[2];
            bool pos = true;
            for (int i = 0; i < 2; ++i) {
              ParametrixSet set = build_parametrix_explicit(c.fr, c.mm, K, delta, Real(Ns[i]), r);
              TransitionalCertificate tc = transitional_certificate(set, c.mm);
              gap[i] = to_d(tc.relative_gap);
              pos = pos && tc.positive;
            }
            ++total;
            if (pos) ++positive;
            double C = gap[1] * std::pow(Ns[1], gamma);
            double ratio = gap[0] / (C * std::pow(Ns[0], -gamma));
            bool ok = ratio <= kDualRouteFactor;
            if (ok) ++in_regime;
            worst_gap = std::max(worst_gap, gap[0]);
            if (!pos || !ok) {
              off += "(" + fmt(ab.first) + "," + fmt(ab.second) + ",alpha " +
                     fmt(to_d(alpha)) + ",K " + std::to_string(K) + ",r " + std::to_string(r) +
                     ",delta " + fmt(to_d(delta)) + ": gap " + fmt(gap[0]) + ", x" +
                     fmt(ratio) + " of C N^-gamma) ";
            }
          }
        }
      }
    }
  }
  o.pass = positive == total && in_regime == total;
  o.detail = "positive " + std::to_string(positive) + "/" + std::to_string(total) +
             "; dual-route gap on C N^-gamma at 1e4 " + std::to_string(in_regime) + "/" +
             std::to_string(total) + "; worst gap at 1e4 " + fmt(worst_gap);
  if (!off.empty()) o.detail += "; off: " + off;
  return o;
}

Outcome kappa_sweep() {
  const Config& c = test_config();
  Outcome o{true, ""};
  for (double kappa : {0.25, 0.75, 1.25, 1.75, 2.25}) {
    int expect = static_cast<int>(std::floor(kappa + 0.5));
    ParametrixSet set = build_parametrix(c.fr, c.mm, Real(kappa), Real(64), 0);
    ZeroPrediction zp = predicted_zeros(set, c.mm);
    int predicted = static_cast<int>(zp.anchored_zeros.size()) + (zp.stray ? 1 : 0);
    int observed = static_cast<int>(oracle(Real(kappa), 64).zeros_edge_rescaled.size());
    bool ok = predicted == expect && observed == expect;
    if (!ok) o.pass = false;
    o.detail += "kappa " + fmt(kappa) + ": expect " + std::to_string(expect) + " predicted " +
                std::to_string(predicted) + " oracle " + std::to_string(observed) +
                (ok ? "" : " [off]") + "; ";
  }
  return o;
}

}  // namespace
}  // namespace hardedge

int main(int argc, char** argv) {
  using namespace hardedge;
  ScopedDigits digits(40);
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"Szego jump", szego_jump},
      {"outer parametrix", outer_parametrix},
      {"outpost analyticity", outpost_analyticity},
      {"boundary residual rate", residual_rate},
      {"depth scaling", depth_scaling},
      {"micro-oracle equivalence", micro_equivalence},
      {"zero colonization", colonization},
      {"stray zero", stray_zero},
      {"dressed kernel", dressed_kernel},
      {"transitional certificates", certificates},
      {"kappa-sweep population", kappa_sweep},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    int id = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(id)) continue;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("criterion %2d %s  %s  (%.1fs)  %s\n", id, o.pass ? "PASS" : "FAIL",
                criteria[i].first, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
