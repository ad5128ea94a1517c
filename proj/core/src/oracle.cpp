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

#include "hardedge/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "hardedge/quadrature.hpp"

namespace hardedge {

namespace {

Real poly_eval(const std::vector<Real>& c, const Real& x) {
  Real acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Real max_phi_gap(const CriticalPotential& cp) {
  Real best(0);
  for (int k = 1; k < 64; ++k) {
    Real x = cp.a * k / 64;
    Real v = effective_potential(cp, x);
    if (v > best) best = v;
  }
  return best;
}

void append(QuadratureRule& into, const QuadratureRule& part) {
  into.nodes.insert(into.nodes.end(), part.nodes.begin(), part.nodes.end());
  into.weights.insert(into.weights.end(), part.weights.begin(), part.weights.end());
}

void append_panels(QuadratureRule& q, const Real& lo, const Real& hi, int panels, int m) {
  for (int k = 0; k < panels; ++k) {
    append(q, gauss_legendre(m, lo + (hi - lo) * k / panels, lo + (hi - lo) * (k + 1) / panels));
  }
}

int scaled(double base, double d) { return static_cast<int>(std::ceil(base * d)); }

// Nodes and quadrature weights (without the measure) on [0, tail]. The first
// panel absorbs x^alpha; `absorbed` counts its nodes.
QuadratureRule build_nodes(const ConformalFrame& fr, const PerturbationWindow& win, int N,
                           int n, unsigned digits, double d, std::size_t& absorbed) {
  const CriticalPotential& cp = fr.cp;
  const Real s = zeta_scale(fr, Real(N));
  QuadratureRule q;

  // [0, eps): panels of width 2 in zeta.
  const Real hx = 2 / s;
  const int pe = std::max(1, static_cast<int>(std::ceil(static_cast<double>(win.eps / hx))));
  const int me = scaled(20, d);
  append(q, gauss_jacobi(me, Real(0), win.eps / pe, Real(0), win.alpha));
  absorbed = q.size();
  for (int k = 1; k < pe; ++k) append(q, gauss_legendre(me, win.eps * k / pe, win.eps * (k + 1) / pe));

  const int gap_panels = scaled(std::max(4.0, N / 8.0), d);
  append_panels(q, win.eps, cp.a, gap_panels, scaled(24, d));
  append_panels(q, cp.a, cp.b, scaled(8, d), scaled(n / 2.0 + 32, d));

  // Tail: stop once exp(-2 (N/T) phi) is below the working precision.
  const Real budget = (static_cast<int>(digits) + 20) * log(Real(10));
  const Real step = (cp.b - cp.a) / 8;
  Real tail = cp.b + step;
  for (int guard = 0; 2 * N * effective_potential(cp, tail) / cp.T < budget; ++guard) {
    if (guard > 4000) throw NumericalFailure("finite_n_ops: tail cutoff not found");
    tail += step;
  }
  append_panels(q, cp.b, tail, gap_panels, scaled(24, d));
  return q;
}

struct StieltjesResult {
  std::vector<Real> a, b, log_h;
  bool ok = true;
};

StieltjesResult stieltjes(const std::vector<Real>& x, const std::vector<Real>& w, int n) {
  const std::size_t m = x.size();
  StieltjesResult out;
  out.a.resize(n);
  out.b.assign(n, Real(0));
  out.log_h.resize(n + 1);
  std::vector<Real> p(m, Real(1)), prev(m, Real(0)), next(m);
  Real h_prev(0);
  for (int k = 0; k <= n; ++k) {
    Real h(0), hx(0);
    for (std::size_t i = 0; i < m; ++i) {
      Real t = w[i] * p[i] * p[i];
      h += t;
      hx += t * x[i];
    }
    if (!(h > 0) || !isfinite(h)) {
      out.ok = false;
      return out;
    }
    out.log_h[k] = log(h);
    if (k == n) break;
    out.a[k] = hx / h;
    if (k > 0) {
      out.b[k] = h / h_prev;
      if (!(out.b[k] > 0)) {
        out.ok = false;
        return out;
      }
    }
    for (std::size_t i = 0; i < m; ++i) next[i] = (x[i] - out.a[k]) * p[i] - out.b[k] * prev[i];
    std::swap(prev, p);
    std::swap(p, next);
    h_prev = h;
  }
  return out;
}

bool attempt(const ConformalFrame& fr, const PerturbationWindow& win, int N,
             const OracleOptions& opt, OracleRun& run) {
  ScopedDigits scope(run.digits);
  std::size_t absorbed = 0;
  QuadratureRule q = build_nodes(fr, win, N, run.n, run.digits, opt.quad_density, absorbed);
  const Real NN(N);
  const Real lscale = log(Real(opt.weight_scale));
  std::vector<Real> w(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    Real lw = perturbed_weight(fr, win, NN, q.nodes[i]) + lscale;
    if (i < absorbed) lw -= win.alpha * log(q.nodes[i]);
    w[i] = q.weights[i] * exp(lw);
  }
  run.quadrature_nodes = q.size();
  StieltjesResult st = stieltjes(q.nodes, w, run.n);
  if (!st.ok) return false;
  run.rec_a = std::move(st.a);
  run.rec_b = std::move(st.b);
  run.log_h = std::move(st.log_h);

  std::vector<Real> off(run.n - 1);
  for (int k = 1; k < run.n; ++k) off[k - 1] = sqrt(run.rec_b[k]);
  run.zeros_all = tridiagonal_eigen(run.rec_a, off).values;
  if (!(run.zeros_all.front() > 0)) return false;
  const Real sep = tenth_power(static_cast<int>(run.digits) / 2);
  for (std::size_t k = 1; k < run.zeros_all.size(); ++k) {
    if (!(run.zeros_all[k] - run.zeros_all[k - 1] > sep * run.zeros_all[k])) return false;
  }
  run.zeros_edge_rescaled.clear();
  const Real s = zeta_scale(fr, NN);
  for (const Real& z : run.zeros_all) {
    if (z < win.eps) run.zeros_edge_rescaled.push_back(s * ztilde(fr, Complex(z)).re);
  }
  return true;
}

}  // namespace

PerturbationWindow make_window(const ConformalFrame& fr, const Real& kappa, const Real& alpha,
                               const std::vector<Real>& f) {
  if (!(alpha > -1)) throw InvalidInput("window: alpha must exceed -1");
  if (static_cast<int>(f.size()) > fr.cp.nu) throw InvalidInput("window: deg f must be < nu");
  return {fr.disk_radius, kappa, alpha, f};
}

Real perturbed_weight(const ConformalFrame& fr, const PerturbationWindow& win, const Real& N,
                      const Real& x) {
  if (!(x > 0)) throw InvalidInput("perturbed_weight: x must be positive");
  const CriticalPotential& cp = fr.cp;
  Real lw = win.alpha * log(x) - N / cp.T * potential_V(cp, x);
  if (x < win.eps) {
    const Real zeta = zeta_scale(fr, N) * ztilde(fr, Complex(x)).re;
    lw += (2 * win.kappa + win.alpha) * fr.gamma * log(N) +
          win.alpha * fr.gamma * log(fr.Ctilde0) + win.alpha * eta(fr, Complex(x)).re -
          poly_eval(win.f, zeta);
  }
  return lw;
}

unsigned oracle_digits(const ConformalFrame& fr, const Real& N) {
  const Real extra = 0.8 * N * max_phi_gap(fr.cp) / (fr.cp.T * log(Real(10)));
  return 30 + static_cast<unsigned>(ceil(extra).convert_to<long>());
}

OracleRun finite_n_ops(const ConformalFrame& fr, const PerturbationWindow& win, int N, int r,
                       const OracleOptions& opt) {
  if (N < 1) throw InvalidInput("finite_n_ops: N must be a positive integer");
  if (N + r < 1) throw InvalidInput("finite_n_ops: need n = N + r >= 1");
  if (!(opt.quad_density >= 0.5) || !(opt.weight_scale > 0)) {
    throw InvalidInput("finite_n_ops: bad options");
  }
  const auto t0 = std::chrono::steady_clock::now();
  OracleRun run;
  run.frame = fr;
  run.window = win;
  run.N = Real(N);
  run.r = r;
  run.n = N + r;
  run.digits = opt.digits != 0 ? opt.digits : oracle_digits(fr, Real(N));
  run.log_weight_scale = log(Real(opt.weight_scale));
  bool ok = attempt(fr, win, N, opt, run);
  if (!ok) {
    run.digits = run.digits * 3 / 2;
    run.escalations = 1;
    ok = attempt(fr, win, N, opt, run);
  }
  if (!ok) throw NumericalFailure("finite_n_ops: positivity lost after precision escalation");
  run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return run;
}

PolyPair oracle_poly_pair(const OracleRun& run, const Real& x) {
  ScopedDigits scope(run.digits);
  Real pm(0), p(1), dpm(0), dp(0);
  for (int k = 0; k < run.n; ++k) {
    Real pn = (x - run.rec_a[k]) * p - run.rec_b[k] * pm;
    Real dpn = p + (x - run.rec_a[k]) * dp - run.rec_b[k] * dpm;
    pm = std::move(p);
    p = std::move(pn);
    dpm = std::move(dp);
    dp = std::move(dpn);
  }
  return {pm, p, dpm, dp};
}

Real oracle_dressed_kernel(const OracleRun& run, const Real& zeta, const Real& zetap) {
  ScopedDigits scope(run.digits);
  const ConformalFrame& fr = run.frame;
  if (!(zeta > 0) || !(zetap > 0)) throw InvalidInput("oracle kernel: zeta must be positive");
  const Real s = zeta_scale(fr, run.N);
  const Real x = x_of_ztilde(fr, zeta / s);
  const Real xp = x_of_ztilde(fr, zetap / s);
  if (!(x < run.window.eps) || !(xp < run.window.eps)) {
    throw InvalidInput("oracle kernel: points must lie in the window");
  }
  const Real dx = 1 / (s * ztilde_prime(fr, Complex(x)).re);
  const Real dxp = 1 / (s * ztilde_prime(fr, Complex(xp)).re);
  const PolyPair u = oracle_poly_pair(run, x);
  const Real lw = perturbed_weight(fr, run.window, run.N, x) + run.log_weight_scale;
  const Real& lh = run.log_h[run.n - 1];
  if (abs(x - xp) <= tenth_power(static_cast<int>(run.digits) / 2) * x) {
    return (u.dpn * u.pm1 - u.dpm1 * u.pn) * exp(lw - lh) * dx;
  }
  const PolyPair v = oracle_poly_pair(run, xp);
  const Real lwp = perturbed_weight(fr, run.window, run.N, xp) + run.log_weight_scale;
  return (u.pn * v.pm1 - u.pm1 * v.pn) / (x - xp) * exp((lw + lwp) / 2 - lh) * sqrt(dx * dxp);
}

}  // namespace hardedge
