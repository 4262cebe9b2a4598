// Copyright 2026 The qcollide Authors
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

#include "qcollide/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <string_view>

#include <fmt/format.h>

#include "qcollide/error.hpp"

namespace qcollide {

namespace {

using nlohmann::json;

constexpr std::array<const char*, 3> kAxisNames = {"x", "y", "z"};

std::string join(const std::string& where, std::string_view key) {
  return where.empty() ? std::string(key) : fmt::format("{}.{}", where, key);
}

void check_keys(const json& obj, const std::string& where,
                std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) {
    throw ConfigError(fmt::format("'{}' must be an object", where.empty() ? "<root>" : where));
  }
  for (const auto& item : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
      throw ConfigError(fmt::format("unknown key '{}'", join(where, item.key())));
    }
  }
}

double read_number(const json& obj, std::string_view key, const std::string& where,
                   double fallback) {
  const auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_number()) throw ConfigError(fmt::format("'{}' must be a number", join(where, key)));
  const double v = it->get<double>();
  if (!std::isfinite(v)) throw ConfigError(fmt::format("'{}' must be finite", join(where, key)));
  return v;
}

double read_beta(const json& obj, const std::string& where, double fallback) {
  const auto it = obj.find("beta");
  if (it == obj.end()) return fallback;
  if (it->is_string()) {
    const std::string s = it->get<std::string>();
    if (s == "inf" || s == "+inf") return kInfiniteBeta;
    if (s == "-inf") return -kInfiniteBeta;
    throw ConfigError(fmt::format("'{}' must be a number, \"inf\" or \"-inf\"", join(where, "beta")));
  }
  return read_number(obj, "beta", where, fallback);
}

json beta_to_json(double beta) {
  if (std::isinf(beta)) return beta > 0 ? "inf" : "-inf";
  return beta;
}

long read_integer(const json& obj, std::string_view key, const std::string& where, long fallback) {
  const auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_number_integer()) {
    throw ConfigError(fmt::format("'{}' must be an integer", join(where, key)));
  }
  return it->get<long>();
}

bool read_bool(const json& obj, std::string_view key, const std::string& where, bool fallback) {
  const auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_boolean()) throw ConfigError(fmt::format("'{}' must be true or false", join(where, key)));
  return it->get<bool>();
}

std::string read_string(const json& obj, std::string_view key, const std::string& where,
                        const std::string& fallback) {
  const auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_string()) throw ConfigError(fmt::format("'{}' must be a string", join(where, key)));
  return it->get<std::string>();
}

void parse_model(const json& doc, RunConfig& cfg) {
  const std::string where = "model";
  check_keys(doc, where, {"omega_s", "omega_a", "beta"});
  cfg.omega_s = read_number(doc, "omega_s", where, cfg.omega_s);
  cfg.omega_a = read_number(doc, "omega_a", where, cfg.omega_a);
  cfg.beta = read_beta(doc, where, cfg.beta);
}

void parse_coupling(const json& doc, RunConfig& cfg) {
  const std::string where = "coupling";
  check_keys(doc, where, {"j", "ssc", "dt", "scaling"});
  cfg.coupling.dt = read_number(doc, "dt", where, cfg.coupling.dt);
  if (!(cfg.coupling.dt > 0.0)) throw ConfigError("'coupling.dt' must be positive");

  const std::string scaling = read_string(doc, "scaling", where, "sqrt_dt");
  if (scaling == "sqrt_dt") {
    cfg.coupling.scaling = Scaling::kSqrtDt;
  } else if (scaling == "none") {
    cfg.coupling.scaling = Scaling::kNone;
  } else {
    throw ConfigError("'coupling.scaling' must be \"sqrt_dt\" or \"none\"");
  }

  const bool has_j = doc.contains("j");
  const bool has_ssc = doc.contains("ssc");
  if (has_j == has_ssc) throw ConfigError("'coupling' needs exactly one of 'j' or 'ssc'");

  if (has_j) {
    const json& j = doc.at("j");
    const std::string jw = "coupling.j";
    if (!j.is_object()) throw ConfigError("'coupling.j' must be an object");
    for (const auto& item : j.items()) {
      const std::string& key = item.key();
      int sys = -1, anc = -1;
      if (key.size() == 2) {
        for (int k = 0; k < 3; ++k) {
          if (key[0] == kAxisNames[k][0]) sys = k;
          if (key[1] == kAxisNames[k][0]) anc = k;
        }
      }
      if (sys < 0 || anc < 0) throw ConfigError(fmt::format("unknown key '{}'", join(jw, key)));
      cfg.coupling.j[sys][anc] = read_number(j, key, jw, 0.0);
    }
    cfg.ssc.reset();
  } else {
    const json& s = doc.at("ssc");
    const std::string sw = "coupling.ssc";
    check_keys(s, sw, {"alpha", "gamma", "magnitude"});
    SscAngles angles;
    angles.alpha = read_number(s, "alpha", sw, angles.alpha);
    angles.gamma = read_number(s, "gamma", sw, angles.gamma);
    angles.magnitude = read_number(s, "magnitude", sw, angles.magnitude);
    cfg.ssc = angles;
    cfg.coupling.j = ssc_to_coupling(angles, cfg.coupling.dt, cfg.coupling.scaling).j;
  }
}

void parse_rho0(const json& doc, RunConfig& cfg) {
  const std::string where = "run.rho0";
  check_keys(doc, where, {"bloch", "named"});
  const bool has_bloch = doc.contains("bloch");
  if (has_bloch == doc.contains("named")) {
    throw ConfigError("'run.rho0' needs exactly one of 'bloch' or 'named'");
  }
  if (has_bloch) {
    const json& b = doc.at("bloch");
    if (!b.is_array() || b.size() != 3) throw ConfigError("'run.rho0.bloch' must be [x, y, z]");
    std::array<double, 3> r{};
    for (std::size_t k = 0; k < 3; ++k) {
      if (!b[k].is_number()) throw ConfigError("'run.rho0.bloch' must be [x, y, z]");
      r[k] = b[k].get<double>();
    }
    cfg.rho0.bloch = r;
  } else {
    cfg.rho0.bloch.reset();
    cfg.rho0.named = read_string(doc, "named", where, "");
  }
  cfg.rho0.state();  // validates
}

void parse_run(const json& doc, RunConfig& cfg) {
  const std::string where = "run";
  check_keys(doc, where, {"n_collisions", "rho0", "convergence_tol", "record_joint"});
  cfg.n_collisions = read_integer(doc, "n_collisions", where, cfg.n_collisions);
  if (cfg.n_collisions < 1) throw ConfigError("'run.n_collisions' must be at least 1");
  cfg.convergence_tol = read_number(doc, "convergence_tol", where, cfg.convergence_tol);
  if (!(cfg.convergence_tol > 0.0)) throw ConfigError("'run.convergence_tol' must be positive");
  cfg.record_joint = read_bool(doc, "record_joint", where, cfg.record_joint);
  if (doc.contains("rho0")) parse_rho0(doc.at("rho0"), cfg);
}

void parse_output(const json& doc, RunConfig& cfg) {
  const std::string where = "output";
  check_keys(doc, where, {"path", "format", "quantities"});
  cfg.output.path = read_string(doc, "path", where, cfg.output.path);
  cfg.output.format = read_string(doc, "format", where, cfg.output.format);
  if (cfg.output.format != "csv" && cfg.output.format != "json") {
    throw ConfigError("'output.format' must be \"csv\" or \"json\"");
  }
  if (doc.contains("quantities")) {
    const json& q = doc.at("quantities");
    if (!q.is_array()) throw ConfigError("'output.quantities' must be a list of column names");
    cfg.output.quantities.clear();
    for (const json& name : q) {
      if (!name.is_string()) throw ConfigError("'output.quantities' must be a list of column names");
      cfg.output.quantities.push_back(name.get<std::string>());
    }
  }
}

std::string json_pointer_for(const std::string& dotted) {
  std::string out;
  std::size_t start = 0;
  while (start <= dotted.size()) {
    const std::size_t dot = std::min(dotted.find('.', start), dotted.size());
    const std::string part = dotted.substr(start, dot - start);
    if (part.empty()) throw ConfigError(fmt::format("malformed parameter path '{}'", dotted));
    out += "/" + part;
    start = dot + 1;
  }
  return out;
}

json apply_axes(json doc, const std::vector<SweepAxis>& axes, const std::vector<double>& values) {
  for (std::size_t a = 0; a < axes.size(); ++a) {
    try {
      doc[json::json_pointer(json_pointer_for(axes[a].path))] = values[a];
    } catch (const json::exception&) {
      throw ConfigError(fmt::format("parameter path '{}' does not name a config value", axes[a].path));
    }
  }
  return doc;
}

std::vector<double> linspace(double lo, double hi, long steps) {
  std::vector<double> out(static_cast<std::size_t>(steps));
  for (long k = 0; k < steps; ++k) {
    out[k] = steps == 1 ? lo : lo + (hi - lo) * double(k) / double(steps - 1);
  }
  if (steps > 1) out.back() = hi;
  return out;
}

SweepAxis parse_axis(const json& doc, const std::string& where) {
  check_keys(doc, where, {"path", "values", "range", "steps"});
  SweepAxis axis;
  axis.path = read_string(doc, "path", where, "");
  if (axis.path.empty()) throw ConfigError(fmt::format("'{}' must be a non-empty string", join(where, "path")));

  const bool has_values = doc.contains("values");
  if (has_values == doc.contains("range")) {
    throw ConfigError(fmt::format("'{}' needs exactly one of 'values' or 'range'", where));
  }
  if (has_values) {
    if (doc.contains("steps")) throw ConfigError(fmt::format("'{}' only goes with 'range'", join(where, "steps")));
    const json& v = doc.at("values");
    if (!v.is_array() || v.empty()) {
      throw ConfigError(fmt::format("'{}' must be a non-empty list", join(where, "values")));
    }
    for (const json& x : v) {
      if (!x.is_number() || !std::isfinite(x.get<double>())) {
        throw ConfigError(fmt::format("'{}' must contain finite numbers", join(where, "values")));
      }
      axis.values.push_back(x.get<double>());
    }
  } else {
    const json& r = doc.at("range");
    if (!r.is_array() || r.size() != 2 || !r[0].is_number() || !r[1].is_number()) {
      throw ConfigError(fmt::format("'{}' must be [lo, hi]", join(where, "range")));
    }
    const std::array<double, 2> lohi = {r[0].get<double>(), r[1].get<double>()};
    if (!std::isfinite(lohi[0]) || !std::isfinite(lohi[1])) {
      throw ConfigError(fmt::format("'{}' must be finite", join(where, "range")));
    }
    const long steps = read_integer(doc, "steps", where, 0);
    if (steps < 1) throw ConfigError(fmt::format("'{}' must be a positive integer", join(where, "steps")));
    axis.range = lohi;
    axis.values = linspace(lohi[0], lohi[1], steps);
  }
  return axis;
}

}  // namespace

DensityMatrix Rho0Spec::state() const {
  if (bloch) return bloch_state((*bloch)[0], (*bloch)[1], (*bloch)[2]);
  if (named == "fig3") return default_initial_state();
  if (named == "ground") return bloch_state(0.0, 0.0, -1.0);
  if (named == "excited") return bloch_state(0.0, 0.0, 1.0);
  if (named == "maximally_mixed") return DensityMatrix::maximally_mixed(2);
  if (named == "plus") return bloch_state(1.0, 0.0, 0.0);
  throw ConfigError(fmt::format("unknown named state '{}'", named));
}

CollisionConfig RunConfig::collision_config() const {
  CollisionConfig c;
  c.hs = QubitHamiltonian{omega_s};
  c.ancilla = AncillaPrep{beta, omega_a};
  c.coupling = coupling;
  c.n_collisions = n_collisions;
  c.rho0 = rho0.state();
  c.record_joint = record_joint;
  c.convergence_tol = convergence_tol;
  c.validate();
  return c;
}

bool RunConfig::operator==(const RunConfig& o) const {
  const auto same_ssc = [](const std::optional<SscAngles>& a, const std::optional<SscAngles>& b) {
    if (a.has_value() != b.has_value()) return false;
    if (!a) return true;
    return a->alpha == b->alpha && a->gamma == b->gamma && a->magnitude == b->magnitude;
  };
  return omega_s == o.omega_s && omega_a == o.omega_a && beta == o.beta &&
         coupling.j == o.coupling.j && coupling.dt == o.coupling.dt &&
         coupling.scaling == o.coupling.scaling && same_ssc(ssc, o.ssc) &&
         n_collisions == o.n_collisions && rho0 == o.rho0 &&
         convergence_tol == o.convergence_tol && record_joint == o.record_joint &&
         output == o.output;
}

RunConfig parse_run_config(const json& doc) {
  check_keys(doc, "", {"model", "coupling", "run", "output"});
  if (!doc.contains("coupling")) throw ConfigError("missing required key 'coupling'");
  RunConfig cfg;
  if (doc.contains("model")) parse_model(doc.at("model"), cfg);
  parse_coupling(doc.at("coupling"), cfg);
  if (doc.contains("run")) parse_run(doc.at("run"), cfg);
  if (doc.contains("output")) parse_output(doc.at("output"), cfg);
  cfg.collision_config();
  return cfg;
}

json to_json(const RunConfig& cfg) {
  json doc;
  doc["model"] = {{"omega_s", cfg.omega_s}, {"omega_a", cfg.omega_a}, {"beta", beta_to_json(cfg.beta)}};

  json coupling = {{"dt", cfg.coupling.dt},
                   {"scaling", cfg.coupling.scaling == Scaling::kSqrtDt ? "sqrt_dt" : "none"}};
  if (cfg.ssc) {
    coupling["ssc"] = {{"alpha", cfg.ssc->alpha},
                       {"gamma", cfg.ssc->gamma},
                       {"magnitude", cfg.ssc->magnitude}};
  } else {
    json j = json::object();
    for (int l = 0; l < 3; ++l)
      for (int m = 0; m < 3; ++m)
        if (cfg.coupling.j[l][m] != 0.0) {
          j[std::string(kAxisNames[l]) + kAxisNames[m]] = cfg.coupling.j[l][m];
        }
    coupling["j"] = j;
  }
  doc["coupling"] = coupling;

  json rho0;
  if (cfg.rho0.bloch) {
    rho0["bloch"] = *cfg.rho0.bloch;
  } else {
    rho0["named"] = cfg.rho0.named;
  }
  doc["run"] = {{"n_collisions", cfg.n_collisions},
                {"rho0", rho0},
                {"convergence_tol", cfg.convergence_tol},
                {"record_joint", cfg.record_joint}};

  json output = {{"format", cfg.output.format}, {"quantities", cfg.output.quantities}};
  if (!cfg.output.path.empty()) output["path"] = cfg.output.path;
  doc["output"] = output;
  return doc;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot read config '{}'", path.string()));
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(fmt::format("malformed config '{}': {}", path.string(), e.what()));
  }
}

RunConfig load_run_config(const std::filesystem::path& path) {
  return parse_run_config(read_json_file(path));
}

std::size_t SweepConfig::size() const {
  std::size_t n = 1;
  for (const SweepAxis& axis : axes) n *= axis.values.size();
  return n;
}

std::vector<double> SweepConfig::point(std::size_t index) const {
  std::vector<double> values(axes.size());
  for (std::size_t a = axes.size(); a-- > 0;) {
    const std::size_t n = axes[a].values.size();
    values[a] = axes[a].values[index % n];
    index /= n;
  }
  return values;
}

RunConfig SweepConfig::point_config(std::size_t index) const {
  return parse_run_config(apply_axes(base, axes, point(index)));
}

SweepConfig parse_sweep_config(const json& doc) {
  check_keys(doc, "", {"base", "axes", "parallel", "max_points", "rows"});
  if (!doc.contains("base")) throw ConfigError("missing required key 'base'");

  SweepConfig cfg;
  try {
    cfg.base = to_json(parse_run_config(doc.at("base")));
  } catch (const ConfigError& e) {
    throw ConfigError(fmt::format("base: {}", e.what()));
  }
  cfg.parallel = static_cast<int>(read_integer(doc, "parallel", "", cfg.parallel));
  if (cfg.parallel < 1) throw ConfigError("'parallel' must be at least 1");
  const long cap = read_integer(doc, "max_points", "", static_cast<long>(cfg.max_points));
  if (cap < 1) throw ConfigError("'max_points' must be at least 1");
  cfg.max_points = static_cast<std::size_t>(cap);

  const std::string rows = read_string(doc, "rows", "", "final");
  if (rows == "final") {
    cfg.rows = SweepRows::kFinal;
  } else if (rows == "all") {
    cfg.rows = SweepRows::kAll;
  } else {
    throw ConfigError("'rows' must be \"final\" or \"all\"");
  }

  if (doc.contains("axes")) {
    const json& axes = doc.at("axes");
    if (!axes.is_array()) throw ConfigError("'axes' must be a list");
    double product = 1.0;
    for (std::size_t a = 0; a < axes.size(); ++a) {
      cfg.axes.push_back(parse_axis(axes[a], fmt::format("axes[{}]", a)));
      product *= double(cfg.axes.back().values.size());
    }
    if (product > double(cfg.max_points)) {
      throw ConfigError(fmt::format("sweep has {:.0f} points, above the cap of {}", product, cfg.max_points));
    }
  }

  // Every path must name a real config key; the first point catches typos.
  std::vector<double> first;
  for (const SweepAxis& axis : cfg.axes) first.push_back(axis.values.front());
  try {
    parse_run_config(apply_axes(cfg.base, cfg.axes, first));
  } catch (const ConfigError& e) {
    throw ConfigError(fmt::format("axes: {}", e.what()));
  }
  return cfg;
}

json to_json(const SweepConfig& cfg) {
  json axes = json::array();
  for (const SweepAxis& axis : cfg.axes) {
    json a = {{"path", axis.path}};
    if (axis.range) {
      a["range"] = *axis.range;
      a["steps"] = axis.values.size();
    } else {
      a["values"] = axis.values;
    }
    axes.push_back(a);
  }
  return {{"base", cfg.base},
          {"axes", axes},
          {"parallel", cfg.parallel},
          {"max_points", cfg.max_points},
          {"rows", cfg.rows == SweepRows::kAll ? "all" : "final"}};
}

SweepConfig load_sweep_config(const std::filesystem::path& path) {
  return parse_sweep_config(read_json_file(path));
}

}  // namespace qcollide
