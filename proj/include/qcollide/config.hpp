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

// JSON run and sweep configurations. The grammar is documented in README.md;
// every key is optional except coupling, and unknown keys are rejected with
// their dotted path.

#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcollide/collision.hpp"

namespace qcollide {

/// Named initial states accepted by run.rho0.named.
inline constexpr std::array<const char*, 5> kNamedStates = {"fig3", "ground", "excited",
                                                           "maximally_mixed", "plus"};

struct Rho0Spec {
  std::optional<std::array<double, 3>> bloch;
  std::string named = "fig3";  ///< ignored when bloch is set

  DensityMatrix state() const;
  bool operator==(const Rho0Spec&) const = default;
};

struct OutputSpec {
  std::string path;  ///< empty: the command picks a file name
  std::string format = "csv";
  std::vector<std::string> quantities;  ///< empty: every column

  bool operator==(const OutputSpec&) const = default;
};

struct RunConfig {
  double omega_s = 1.0;
  double omega_a = 1.0;
  double beta = 1.0;
  CouplingSpec coupling;
  /// Set when the coupling was given as angles; coupling.j is then derived.
  std::optional<SscAngles> ssc;
  long n_collisions = 1000;
  Rho0Spec rho0;
  double convergence_tol = 1e-10;
  bool record_joint = false;
  OutputSpec output;

  CollisionConfig collision_config() const;
  bool operator==(const RunConfig& other) const;
};

RunConfig parse_run_config(const nlohmann::json& doc);
nlohmann::json to_json(const RunConfig& config);
RunConfig load_run_config(const std::filesystem::path& path);

inline constexpr std::size_t kDefaultMaxSweepPoints = 100'000;

struct SweepAxis {
  std::string path;  ///< dotted key path into the run config, e.g. "model.beta"
  std::vector<double> values;
  /// Set when the axis was given as {range: [lo, hi], steps}; values is the
  /// inclusive linspace.
  std::optional<std::array<double, 2>> range;

  bool operator==(const SweepAxis&) const = default;
};

enum class SweepRows { kAll, kFinal };

struct SweepConfig {
  nlohmann::json base;
  std::vector<SweepAxis> axes;
  int parallel = 1;
  std::size_t max_points = kDefaultMaxSweepPoints;
  SweepRows rows = SweepRows::kFinal;

  std::size_t size() const;
  /// Axis values of point i; the last axis varies fastest.
  std::vector<double> point(std::size_t index) const;
  /// The run configuration of point i.
  RunConfig point_config(std::size_t index) const;
  bool operator==(const SweepConfig&) const = default;
};

SweepConfig parse_sweep_config(const nlohmann::json& doc);
nlohmann::json to_json(const SweepConfig& config);
SweepConfig load_sweep_config(const std::filesystem::path& path);

nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace qcollide
