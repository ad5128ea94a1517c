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

#include "config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace hardedge::cli {
namespace {

Real real_of(const json& v, const char* what) {
  std::string text;
  if (v.is_string()) {
    text = v.get<std::string>();
  } else if (v.is_number()) {
    text = v.dump();
  } else {
    throw InvalidInput(std::string("config: ") + what + " must be a number");
  }
  try {
    return Real(text);
  } catch (const std::exception&) {
    throw InvalidInput(std::string("config: cannot parse ") + what + " = " + text);
  }
}

int int_of(const json& v, const char* what) {
  if (!v.is_number_integer()) throw InvalidInput(std::string("config: ") + what + " must be an integer");
  return v.get<int>();
}

const json& section(const json& root, const char* name) {
  static const json empty = json::object();
  if (!root.contains(name)) return empty;
  const json& s = root.at(name);
  if (!s.is_object()) throw InvalidInput(std::string("config: ") + name + " must be an object");
  return s;
}

json number_json(const Real& x) { return json::parse(to_string(x, 17)); }

std::vector<int> parse_grid(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    double v = 0;
    try {
      std::size_t used = 0;
      v = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidInput("--n-grid: cannot parse '" + item + "'");
    }
    if (!(v >= 1) || v != std::floor(v) || v > 2e9) {
      throw InvalidInput("--n-grid: entries must be positive integers");
    }
    out.push_back(static_cast<int>(v));
  }
  return out;
}

}  // namespace

ExperimentConfig load_config(const std::string& path) {
  json root = json::object();
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("config: cannot open " + path);
    try {
      root = json::parse(in);
    } catch (const json::parse_error& e) {
      throw InvalidInput(std::string("config: malformed JSON: ") + e.what());
    }
    if (!root.is_object()) throw InvalidInput("config: top level must be an object");
  }
  ExperimentConfig c;
  const json& sp = section(root, "spectral");
  c.a = sp.contains("a") ? real_of(sp["a"], "spectral.a") : Real(1);
  c.b = sp.contains("b") ? real_of(sp["b"], "spectral.b") : Real(3);
  c.T = sp.contains("T") ? real_of(sp["T"], "spectral.T") : Real(1);
  c.nu = sp.contains("nu") ? int_of(sp["nu"], "spectral.nu") : 1;
  if (sp.contains("profile_nus")) {
    for (const json& v : sp["profile_nus"]) c.profile_nus.push_back(int_of(v, "spectral.profile_nus"));
  } else {
    c.profile_nus = {1, 2, 3, 4};
  }

  const json& mi = section(root, "micro");
  c.alpha = mi.contains("alpha") ? real_of(mi["alpha"], "micro.alpha") : Real(1) / 2;
  if (mi.contains("f")) {
    for (const json& v : mi["f"]) c.f.push_back(real_of(v, "micro.f"));
  }

  const json& re = section(root, "regime");
  c.kappa = re.contains("kappa") ? real_of(re["kappa"], "regime.kappa") : Real(5) / 4;
  c.r = re.contains("r") ? int_of(re["r"], "regime.r") : 0;
  if (re.contains("kappas")) {
    for (const json& v : re["kappas"]) c.kappas.push_back(real_of(v, "regime.kappas"));
  } else {
    for (int k : {1, 3, 5, 7, 9}) c.kappas.push_back(Real(k) / 4);
  }

  const json& nu = section(root, "numerics");
  if (nu.contains("digits")) {
    int d = int_of(nu["digits"], "numerics.digits");
    if (d < 20 || d > 2000) throw InvalidInput("config: numerics.digits must lie in [20, 2000]");
    c.digits = static_cast<unsigned>(d);
  }
  if (nu.contains("n_grid")) {
    for (const json& v : nu["n_grid"]) c.n_grid.push_back(int_of(v, "numerics.n_grid"));
  } else {
    c.n_grid = {16, 32, 64, 128};
  }
  if (nu.contains("parametrix_n_grid")) {
    for (const json& v : nu["parametrix_n_grid"]) {
      if (!v.is_number()) throw InvalidInput("config: numerics.parametrix_n_grid must hold numbers");
      c.parametrix_n_grid.push_back(v.get<double>());
    }
  } else {
    c.parametrix_n_grid = {1e2, 1e3, 1e4, 1e5};
  }
  if (nu.contains("depth")) c.depth = int_of(nu["depth"], "numerics.depth");
  if (nu.contains("sweep_n")) c.sweep_n = int_of(nu["sweep_n"], "numerics.sweep_n");
  if (nu.contains("disk_policy")) {
    if (!nu["disk_policy"].is_string()) throw InvalidInput("config: numerics.disk_policy must be a string");
    c.disk_policy = nu["disk_policy"].get<std::string>();
  }

  const json& out = section(root, "output");
  if (out.contains("directory")) {
    if (!out["directory"].is_string()) throw InvalidInput("config: output.directory must be a string");
    c.directory = out["directory"].get<std::string>();
  }
  if (out.contains("formats")) {
    for (const json& v : out["formats"]) {
      if (!v.is_string()) throw InvalidInput("config: output.formats must hold strings");
      c.formats.push_back(v.get<std::string>());
    }
  } else {
    c.formats = {"json", "csv"};
  }
  return c;
}

void finalize_config(ExperimentConfig& c, const Overrides& ov) {
  if (!ov.out.empty()) c.directory = ov.out;
  if (ov.digits != 0) {
    if (ov.digits < 20 || ov.digits > 2000) throw InvalidInput("--digits must lie in [20, 2000]");
    c.digits = ov.digits;
  }
  if (!ov.n_grid.empty()) {
    std::vector<int> g = parse_grid(ov.n_grid);
    c.n_grid = g;
    c.parametrix_n_grid.assign(g.begin(), g.end());
  }
  if (ov.depth != 0) c.depth = ov.depth;
  if (ov.long_grid && std::find(c.n_grid.begin(), c.n_grid.end(), 256) == c.n_grid.end()) {
    c.n_grid.push_back(256);
  }

  if (!(c.a > 0) || !(c.b > c.a) || !(c.T > 0)) {
    throw InvalidInput("config: need 0 < a < b and T > 0");
  }
  if (c.nu < 1) throw InvalidInput("config: spectral.nu must be >= 1");
  for (int n : c.profile_nus) {
    if (n < 1) throw InvalidInput("config: spectral.profile_nus entries must be >= 1");
  }
  if (!(c.alpha > -1)) throw InvalidInput("config: micro.alpha must exceed -1");
  if (static_cast<int>(c.f.size()) > c.nu - 1) {
    throw InvalidInput("config: micro.f must have degree <= nu - 1");
  }
  for (int n : c.n_grid) {
    if (n < 1) throw InvalidInput("config: numerics.n_grid entries must be >= 1");
  }
  for (double n : c.parametrix_n_grid) {
    if (!(n > 0)) throw InvalidInput("config: numerics.parametrix_n_grid entries must be positive");
  }
  if (c.depth < 1 || c.depth > 6) throw InvalidInput("config: Schlesinger depth must lie in [1, 6]");
  if (c.sweep_n < 1) throw InvalidInput("config: numerics.sweep_n must be >= 1");
  if (c.disk_policy != "starlike") {
    throw InvalidInput("config: numerics.disk_policy supports only \"starlike\"");
  }
  for (const std::string& f : c.formats) {
    if (f != "json" && f != "csv") throw InvalidInput("config: unknown output format " + f);
  }

  json fj = json::array();
  for (const Real& v : c.f) fj.push_back(number_json(v));
  json kj = json::array();
  for (const Real& v : c.kappas) kj.push_back(number_json(v));
  c.resolved = {
      {"spectral",
       {{"a", number_json(c.a)},
        {"b", number_json(c.b)},
        {"T", number_json(c.T)},
        {"nu", c.nu},
        {"profile_nus", c.profile_nus}}},
      {"micro", {{"alpha", number_json(c.alpha)}, {"f", fj}}},
      {"regime", {{"kappa", number_json(c.kappa)}, {"r", c.r}, {"kappas", kj}}},
      {"numerics",
       {{"digits", c.digits},
        {"n_grid", c.n_grid},
        {"parametrix_n_grid", c.parametrix_n_grid},
        {"depth", c.depth},
        {"sweep_n", c.sweep_n},
        {"disk_policy", c.disk_policy}}},
      {"output", {{"directory", c.directory}, {"formats", c.formats}}},
  };
}

bool wants(const ExperimentConfig& cfg, const std::string& format) {
  return std::find(cfg.formats.begin(), cfg.formats.end(), format) != cfg.formats.end();
}

}  // namespace hardedge::cli
