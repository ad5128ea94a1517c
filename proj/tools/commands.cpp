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

#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>

#include "hardedge/micro.hpp"
#include "hardedge/oracle.hpp"
#include "hardedge/parametrix.hpp"
#include "hardedge/predict.hpp"
#include "hardedge/rate_fit.hpp"
#include "hardedge/schlesinger.hpp"
#include "hardedge/spectral.hpp"
#include "hardedge/version.hpp"

namespace hardedge::cli {
namespace {

namespace fs = std::filesystem;

// Slope tolerance for compare and schlesinger-depth summaries.
constexpr double kSlopeTol = 0.2;

double d(const Real& x) { return x.convert_to<double>(); }

json reals(const std::vector<Real>& v) {
  json out = json::array();
  for (const Real& x : v) out.push_back(d(x));
  return out;
}

fs::path out_path(const ExperimentConfig& cfg, const std::string& name) {
  fs::path dir(cfg.directory);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw InvalidInput("cannot create output directory " + cfg.directory);
  return dir / name;
}

void write_json(const ExperimentConfig& cfg, const std::string& command, const std::string& name,
                const json& result) {
  if (!wants(cfg, "json")) return;
  json doc = {{"schema_version", kSchemaVersion},
              {"library", "hardedge"},
              {"version", kVersion},
              {"command", command},
              {"config", cfg.resolved},
              {"result", result}};
  std::ofstream os(out_path(cfg, name));
  os << doc.dump(2) << "\n";
}

class Csv {
 public:
  Csv(const ExperimentConfig& cfg, const std::string& name, const std::string& header) {
    if (!wants(cfg, "csv")) return;
    os_.emplace(out_path(cfg, name));
    *os_ << header << "\n";
  }
  template <class... Ts>
  void row(const Ts&... cols) {
    if (!os_) return;
    bool first = true;
    ((*os_ << (first ? "" : ",") << format(cols), first = false), ...);
    *os_ << "\n";
    os_->flush();
  }

 private:
  static std::string format(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
  }
  static std::string format(int v) { return std::to_string(v); }
  static std::string format(const std::string& v) { return v; }
  std::optional<std::ofstream> os_;
};

struct Pipeline {
  CriticalPotential cp;
  ConformalFrame fr;
  MicroModel mm;
};

Pipeline build(const ExperimentConfig& cfg, int Kmax) {
  Pipeline p{build_critical_potential(cfg.a, cfg.b, cfg.T, cfg.nu), {}, {}};
  p.fr = conformal_frame(p.cp);
  p.mm = micro_model(cfg.alpha, cfg.nu, cfg.f, Kmax);
  return p;
}

int kmax_for(const Real& kappa) { return std::max(2, nearest_K(kappa) + 2); }

const char* kind_name(KernelKind k) {
  switch (k) {
    case KernelKind::transitional_plus: return "transitional_plus";
    case KernelKind::transitional_minus: return "transitional_minus";
    default: return "generic";
  }
}

json fit_json(const std::vector<std::pair<double, double>>& pts, double expected) {
  json j = {{"points", static_cast<int>(pts.size())}, {"expected_slope", expected},
            {"tolerance", kSlopeTol}};
  if (pts.size() < 3) {
    j["status"] = "insufficient_points";
    j["pass"] = false;
    return j;
  }
  RateFit f = rate_fit(pts);
  j["slope"] = f.slope;
  j["intercept"] = f.intercept;
  j["residual"] = f.residual;
  j["slope_stderr"] = f.slope_stderr;
  j["pass"] = std::fabs(f.slope - expected) <= kSlopeTol;
  j["status"] = "fitted";
  return j;
}

void print_fit(const std::string& label, const json& j) {
  if (j["status"] == "fitted") {
    std::printf("%-10s slope %+.3f expected %+.3f  %s\n", label.c_str(), j["slope"].get<double>(),
                j["expected_slope"].get<double>(), j["pass"].get<bool>() ? "PASS" : "FAIL");
  } else {
    std::printf("%-10s not enough points for a fit  FAIL\n", label.c_str());
  }
}

const std::vector<std::pair<double, double>> kKernelSamples{{0.5, 0.5}, {1, 1}, {1, 2}, {2, 2}};

}  // namespace

void cmd_potential(const ExperimentConfig& cfg) {
  json profiles = json::array();
  std::printf("%4s %12s %12s %12s\n", "nu", "C0", "q", "c");
  for (int nu : cfg.profile_nus) {
    CriticalPotential cp = build_critical_potential(cfg.a, cfg.b, cfg.T, nu);
    const std::string file = "potential_nu" + std::to_string(nu) + ".csv";
    Csv csv(cfg, file, "x,V,phi,rho");
    const int samples = 400;
    const Real hi = cfg.b + (cfg.b - cfg.a) / 2;
    for (int k = 0; k <= samples; ++k) {
      Real x = hi * k / samples;
      Real rho = (x > cp.a && x < cp.b) ? density(cp, x) : Real(0);
      csv.row(d(x), d(potential_V(cp, x)), d(effective_potential(cp, x)), d(rho));
    }
    profiles.push_back({{"nu", nu},
                        {"C0", d(cp.C0)},
                        {"q", d(cp.q)},
                        {"c", d(cp.c)},
                        {"V", reals(cp.V)},
                        {"csv", file}});
    std::printf("%4d %12.6g %12.6g %12.6g\n", nu, d(cp.C0), d(cp.q), d(cp.c));
  }
  write_json(cfg, "potential", "potential.json", {{"profiles", profiles}});
}

void cmd_predict(const ExperimentConfig& cfg) {
  if (cfg.n_grid.empty()) throw InvalidInput("predict: N grid is empty");
  Pipeline p = build(cfg, kmax_for(cfg.kappa));
  json records = json::array();
  std::printf("%8s %3s %7s  %-28s %s\n", "N", "K", "delta", "anchored zeros", "stray");
  for (int N : cfg.n_grid) {
    ParametrixSet set = build_parametrix(p.fr, p.mm, cfg.kappa, Real(N), cfg.r);
    ZeroPrediction zp = predicted_zeros(set, p.mm);
    json rec = {{"N", N},
                {"K", zp.K},
                {"delta", d(zp.delta)},
                {"anchored_zeros", reals(zp.anchored_zeros)},
                {"convergence_exponent", d(zp.convergence_exponent)}};
    rec["stray"] = zp.stray ? json{{"ab_route", d(zp.stray->ab_route)},
                                   {"closed_form", d(zp.stray->closed_form)},
                                   {"growth_exponent", d(zp.stray->growth_exponent)}}
                            : json(nullptr);
    rec["mixing_lambda"] = zp.mixing_lambda ? json(d(*zp.mixing_lambda)) : json(nullptr);

    KernelPrediction kp = kernel_prediction(set, p.mm);
    json samples = json::array();
    for (auto [z, zp2] : kKernelSamples) {
      KernelValue kd = predicted_kernel(set, p.mm, Complex(Real(z)), Complex(Real(zp2)), true);
      json s = {{"zeta", z},
                {"zeta_prime", zp2},
                {"dressed", {{"re", d(kd.value.re)}, {"im", d(kd.value.im)}}}};
      try {
        KernelValue kr = predicted_kernel(set, p.mm, Complex(Real(z)), Complex(Real(zp2)), false);
        s["raw"] = {{"log_magnitude", d(kr.log_magnitude)}, {"phase", d(kr.phase)}};
      } catch (const InvalidInput&) {
        s["raw"] = nullptr;  // point outside the disk at this N
      }
      samples.push_back(s);
    }
    rec["kernel"] = {{"kind", kind_name(kp.kind)}, {"mixing", d(kp.mixing)}, {"samples", samples}};

    if (zp.K >= 1 && abs(zp.delta) == Real(1) / 2) {
      TransitionalCertificate tc = transitional_certificate(set, p.mm);
      rec["certificate"] = {{"value", d(tc.value)},
                            {"ab_route", {{"re", d(tc.ab_route.re)}, {"im", d(tc.ab_route.im)}}},
                            {"relative_gap", d(tc.relative_gap)},
                            {"positive", tc.positive}};
    } else {
      rec["certificate"] = nullptr;
    }
    records.push_back(rec);

    std::string zs;
    for (const Real& z : zp.anchored_zeros) zs += to_string(z, 8) + " ";
    std::printf("%8d %3d %7.3f  %-28s %s\n", N, zp.K, d(zp.delta), zs.c_str(),
                zp.stray ? to_string(zp.stray->closed_form, 8).c_str() : "-");
  }
  write_json(cfg, "predict", "predict.json", {{"predictions", records}});
}

namespace {

json oracle_record(const OracleRun& run) {
  json rec = {{"N", d(run.N)},
              {"r", run.r},
              {"n", run.n},
              {"digits", run.digits},
              {"escalations", run.escalations},
              {"quadrature_nodes", run.quadrature_nodes},
              {"log_h_n_minus_1", d(run.log_h[run.n - 1])},
              {"log_h_n", d(run.log_h[run.n])},
              {"smallest_zero", d(run.zeros_all.front())},
              {"edge_zeros", reals(run.zeros_edge_rescaled)},
              {"seconds", run.seconds}};
  return rec;
}

}  // namespace

void cmd_oracle(const ExperimentConfig& cfg) {
  if (cfg.n_grid.empty()) throw InvalidInput("oracle: N grid is empty");
  Pipeline p = build(cfg, 1);
  PerturbationWindow win = make_window(p.fr, cfg.kappa, cfg.alpha, cfg.f);
  Csv zeros(cfg, "oracle_edge_zeros.csv", "N,index,zeta");
  Csv kern(cfg, "oracle_kernel.csv", "N,zeta,zeta_prime,dressed_kernel");
  json runs = json::array();
  std::printf("%6s %7s %7s %9s  %s\n", "N", "digits", "nodes", "seconds", "edge zeros (zeta)");
  for (int N : cfg.n_grid) {
    OracleRun run = finite_n_ops(p.fr, win, N, cfg.r);
    json rec = oracle_record(run);
    json ks = json::array();
    for (auto [z, zp] : kKernelSamples) {
      Real v = oracle_dressed_kernel(run, Real(z), Real(zp));
      ks.push_back({{"zeta", z}, {"zeta_prime", zp}, {"dressed", d(v)}});
      kern.row(N, z, zp, d(v));
    }
    rec["kernel"] = ks;
    runs.push_back(rec);
    std::string zs;
    for (std::size_t i = 0; i < run.zeros_edge_rescaled.size(); ++i) {
      zeros.row(N, static_cast<int>(i), d(run.zeros_edge_rescaled[i]));
      zs += to_string(run.zeros_edge_rescaled[i], 8) + " ";
    }
    std::printf("%6d %7u %7zu %9.2f  %s\n", N, run.digits, run.quadrature_nodes, run.seconds,
                zs.empty() ? "-" : zs.c_str());
  }
  write_json(cfg, "oracle", "oracle.json", {{"runs", runs}});
}

void cmd_compare(const ExperimentConfig& cfg, const CommandFlags& flags) {
  if (flags.synthetic) {
    // Planted rates: 0.7 N^-1/2 with a bounded multiplicative wobble.
    Csv csv(cfg, "compare_synthetic.csv", "N,error");
    std::vector<std::pair<double, double>> pts;
    std::vector<int> grid = cfg.n_grid.empty() ? std::vector<int>{16, 32, 64, 128} : cfg.n_grid;
    for (int N : grid) {
      double e = 0.7 * std::pow(N, -0.5) * (1 + 0.05 * std::sin(N));
      pts.emplace_back(N, e);
      csv.row(N, e);
    }
    json fit = fit_json(pts, -0.5);
    print_fit("synthetic", fit);
    write_json(cfg, "compare", "compare.json", {{"synthetic", true}, {"fits", {{"synthetic", fit}}}});
    if (!fit["pass"].get<bool>()) throw NumericalFailure("compare: synthetic self-test failed");
    return;
  }
  if (cfg.n_grid.empty()) throw InvalidInput("compare: N grid is empty");
  Pipeline p = build(cfg, kmax_for(cfg.kappa));
  PerturbationWindow win = make_window(p.fr, cfg.kappa, cfg.alpha, cfg.f);
  Csv zc(cfg, "compare_zeros.csv", "N,error");
  Csv sc(cfg, "compare_stray.csv", "N,error");
  Csv kc(cfg, "compare_kernel.csv", "N,error");
  std::vector<std::pair<double, double>> zpts, spts, kpts;
  json rows = json::array();
  Real zero_exp(0), growth(0), kern_exp(0);
  std::string aborted;
  for (int N : cfg.n_grid) {
    OracleRun run;
    try {
      run = finite_n_ops(p.fr, win, N, cfg.r);
    } catch (const NumericalFailure& e) {
      aborted = e.what();
      break;
    }
    ParametrixSet set = build_parametrix(p.fr, p.mm, cfg.kappa, Real(N), cfg.r);
    ZeroPrediction zp = predicted_zeros(set, p.mm);
    KernelPrediction kp = kernel_prediction(set, p.mm);
    zero_exp = zp.convergence_exponent;
    kern_exp = zp.convergence_exponent;
    json row = {{"N", N}, {"oracle", oracle_record(run)}};
    const auto& ez = run.zeros_edge_rescaled;
    const std::size_t na = zp.anchored_zeros.size();
    if (na > 0 && ez.size() >= na) {
      double err = 0;
      for (std::size_t i = 0; i < na; ++i) {
        err = std::max(err, d(abs(ez[i] - zp.anchored_zeros[i])));
      }
      zpts.emplace_back(N, err);
      zc.row(N, err);
      row["zero_error"] = err;
    }
    if (zp.stray && !ez.empty()) {
      growth = zp.stray->growth_exponent;
      double z = d(ez.back());
      spts.emplace_back(N, z);
      sc.row(N, z);
      row["stray"] = {{"oracle", z}, {"closed_form", d(zp.stray->closed_form)},
                      {"ratio", z / d(zp.stray->closed_form)}};
    }
    if (zp.K >= 1) {
      Real lim = micro_dressed_kernel(p.mm, kp, Complex(Real(1)), Complex(Real(2))).re;
      Real fin = oracle_dressed_kernel(run, Real(1), Real(2));
      double err = d(abs(fin - lim) / abs(lim));
      kpts.emplace_back(N, err);
      kc.row(N, err);
      row["kernel_error"] = err;
    }
    rows.push_back(row);
    std::printf("N %5d  edge zeros %zu\n", N, ez.size());
  }
  json fits = json::object();
  if (!zpts.empty()) fits["zeros"] = fit_json(zpts, -d(zero_exp));
  if (!spts.empty()) fits["stray"] = fit_json(spts, d(growth));
  if (!kpts.empty()) fits["kernel"] = fit_json(kpts, -d(kern_exp));
  for (auto& [name, fit] : fits.items()) print_fit(name, fit);
  json result = {{"rows", rows}, {"fits", fits}};
  if (!aborted.empty()) result["aborted"] = aborted;
  write_json(cfg, "compare", "compare.json", result);
  if (!aborted.empty()) throw NumericalFailure(aborted);
}

void cmd_sweep_kappa(const ExperimentConfig& cfg, const CommandFlags& flags) {
  if (cfg.kappas.empty()) throw InvalidInput("sweep-kappa: kappa list is empty");
  Real kmax(0);
  for (const Real& k : cfg.kappas) {
    if (k > kmax) kmax = k;
  }
  Pipeline p = build(cfg, kmax_for(kmax));
  Csv csv(cfg, "sweep_kappa.csv", "kappa,K,predicted,oracle");
  json rows = json::array();
  std::printf("%8s %3s %10s %8s\n", "kappa", "K", "predicted", "oracle");
  for (const Real& kappa : cfg.kappas) {
    ParametrixSet set = build_parametrix(p.fr, p.mm, kappa, Real(cfg.sweep_n), cfg.r);
    ZeroPrediction zp = predicted_zeros(set, p.mm);
    int predicted = static_cast<int>(zp.anchored_zeros.size()) + (zp.stray ? 1 : 0);
    json row = {{"kappa", d(kappa)}, {"K", zp.K}, {"predicted", predicted}};
    std::string oc = "";
    if (flags.with_oracle) {
      PerturbationWindow win = make_window(p.fr, kappa, cfg.alpha, cfg.f);
      OracleRun run = finite_n_ops(p.fr, win, cfg.sweep_n, cfg.r);
      int observed = static_cast<int>(run.zeros_edge_rescaled.size());
      row["oracle"] = observed;
      oc = std::to_string(observed);
    } else {
      row["oracle"] = nullptr;
    }
    rows.push_back(row);
    csv.row(d(kappa), zp.K, predicted, oc);
    std::printf("%8.4g %3d %10d %8s\n", d(kappa), zp.K, predicted, oc.empty() ? "-" : oc.c_str());
  }
  write_json(cfg, "sweep-kappa", "sweep_kappa.json",
             {{"N", cfg.sweep_n}, {"with_oracle", flags.with_oracle}, {"rows", rows}});
}

void cmd_schlesinger_depth(const ExperimentConfig& cfg) {
  if (cfg.parametrix_n_grid.empty()) throw InvalidInput("schlesinger-depth: N grid is empty");
  Pipeline p = build(cfg, kmax_for(cfg.kappa) + cfg.depth);
  Csv csv(cfg, "schlesinger_depth.csv", "N,p,residual");
  std::vector<std::vector<std::pair<double, double>>> pts(cfg.depth + 1);
  json rows = json::array();
  for (double N : cfg.parametrix_n_grid) {
    ParametrixSet set = build_parametrix(p.fr, p.mm, cfg.kappa, Real(N), cfg.r);
    json res = json::array();
    double base = d(boundary_residual(set, p.mm, 128));
    pts[0].emplace_back(N, base);
    csv.row(N, 0, base);
    res.push_back(base);
    for (int q = 1; q <= cfg.depth; ++q) {
      double v = d(improved_boundary_residual(improve(set, p.mm, q), p.mm, 128));
      pts[q].emplace_back(N, v);
      csv.row(N, q, v);
      res.push_back(v);
    }
    rows.push_back({{"N", N}, {"residuals", res}});
    std::printf("N %-8g", N);
    for (const json& v : res) std::printf(" %.3e", v.get<double>());
    std::printf("\n");
  }
  const Real gamma = Real(1) / cfg.nu;
  json fits = json::array();
  for (int q = 0; q <= cfg.depth; ++q) {
    // q = 0 is the single-factor parametrix, whose rate depends on delta.
    double expected = q == 0 ? std::nan("") : -(q + 1) * d(gamma);
    json f = fit_json(pts[q], expected);
    if (q == 0) {
      f.erase("expected_slope");
      f.erase("pass");
    } else {
      print_fit("p = " + std::to_string(q), f);
    }
    f["p"] = q;
    fits.push_back(f);
  }
  write_json(cfg, "schlesinger-depth", "schlesinger_depth.json", {{"rows", rows}, {"fits", fits}});
}

}  // namespace hardedge::cli
