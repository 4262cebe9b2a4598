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

// qcollide command-line front end.
//
// Exit codes: 0 success, 2 configuration or output-path error, 3 numerical
// failure (including any failed sweep point).

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "qcollide/config.hpp"
#include "qcollide/error.hpp"
#include "qcollide/experiments.hpp"

namespace fs = std::filesystem;
using namespace qcollide;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct Options {
  std::string config;
  std::string out;
  std::string format;
  int parallel = 0;  // 0: take the sweep config's value
  std::string method = "kernel";
  bool verbose = false;
};

fs::path output_dir(const Options& opt) {
  if (!opt.out.empty()) return opt.out;
  if (const char* env = std::getenv("QCOLLIDE_OUT_DIR"); env && *env) return env;
  return ".";
}

Format output_format(const Options& opt, const std::string& configured) {
  return parse_format(opt.format.empty() ? configured : opt.format);
}

// A configured output.path is resolved against the output directory when
// relative; otherwise the command's default stem is used.
fs::path output_file(const Options& opt, const std::string& configured, const std::string& stem,
                     Format format) {
  fs::path p = configured.empty() ? fs::path(fmt::format("{}.{}", stem, extension(format)))
                                  : fs::path(configured);
  return p.is_absolute() ? p : output_dir(opt) / p;
}

void emit(const Table& table, const fs::path& path, Format format) {
  write_text(path, encode(table, format));
  std::cout << path.string() << '\n';
}

int cmd_run(const Options& opt) {
  const RunConfig cfg = load_run_config(opt.config);
  const Format format = output_format(opt, cfg.output.format);
  emit(run_table(cfg), output_file(opt, cfg.output.path, "run", format), format);
  return 0;
}

int cmd_steady(const Options& opt) {
  const RunConfig cfg = load_run_config(opt.config);
  const SteadyChoice choice = parse_steady_choice(opt.method);
  const Format format = output_format(opt, cfg.output.format);
  emit(steady_table(cfg, choice), output_file(opt, cfg.output.path, "steady", format), format);
  return 0;
}

int cmd_sweep(const Options& opt) {
  const SweepConfig cfg = load_sweep_config(opt.config);
  const RunConfig base = parse_run_config(cfg.base);
  const Format format = output_format(opt, base.output.format);
  const int parallel = opt.parallel > 0 ? opt.parallel : cfg.parallel;
  const SweepOutcome result = run_sweep(cfg, parallel);

  const fs::path path = output_file(opt, base.output.path, "sweep", format);
  emit(result.merged, path, format);
  if (result.errors.rows.empty()) return 0;
  fs::path errors = path;
  errors.replace_extension(fmt::format("errors.{}", extension(format)));
  emit(result.errors, errors, format);
  spdlog::error("{} of {} sweep points failed", result.errors.rows.size(), cfg.size());
  return kExitNumerical;
}

int cmd_fig3(const Options& opt) {
  const Format format = output_format(opt, "csv");
  const Fig3Data data = fig3();
  const fs::path dir = output_dir(opt);
  const std::string ext(extension(format));
  emit(data.ratio_scan, dir / ("fig3a." + ext), format);
  emit(data.traces, dir / ("fig3_traces." + ext), format);
  emit(data.steady, dir / ("fig3_steady." + ext), format);
  return 0;
}

int cmd_fig5(const Options& opt) {
  const Format format = output_format(opt, "csv");
  const Fig5Data data = fig5();
  const fs::path dir = output_dir(opt);
  const std::string ext(extension(format));
  emit(data.coherence, dir / ("fig5a." + ext), format);
  emit(data.traces, dir / ("fig5_traces." + ext), format);
  return 0;
}

int cmd_ergotropy(const Options& opt) {
  const Format format = output_format(opt, "csv");
  const ErgotropyData data = ergotropy_surface();
  const fs::path dir = output_dir(opt);
  const std::string ext(extension(format));
  emit(data.surface, dir / ("ergotropy_surface." + ext), format);
  emit(data.slice, dir / ("ergotropy_slice." + ext), format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum collision-model simulator"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("-v,--verbose", opt.verbose, "Log progress to stderr");

  const auto add_output = [&opt](CLI::App* sub) {
    sub->add_option("--out", opt.out, "Output directory (default: $QCOLLIDE_OUT_DIR or .)");
    sub->add_option("--format", opt.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  };

  CLI::App* run_cmd = app.add_subcommand("run", "Simulate one trajectory");
  run_cmd->add_option("--config", opt.config, "Run config (JSON)")->required();
  add_output(run_cmd);

  CLI::App* steady_cmd = app.add_subcommand("steady", "Solve for the steady state");
  steady_cmd->add_option("--config", opt.config, "Run config (JSON)")->required();
  steady_cmd->add_option("--method", opt.method, "kernel, iteration or both")
      ->check(CLI::IsMember({"kernel", "iteration", "both"}));
  add_output(steady_cmd);

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Cartesian parameter sweep");
  sweep_cmd->add_option("--config", opt.config, "Sweep config (JSON)")->required();
  sweep_cmd->add_option("--parallel", opt.parallel, "Worker threads")->check(CLI::PositiveNumber);
  add_output(sweep_cmd);

  CLI::App* fig3_cmd = app.add_subcommand("fig3", "Effective temperature and current traces");
  add_output(fig3_cmd);
  CLI::App* fig5_cmd = app.add_subcommand("fig5", "Steady-state coherence");
  add_output(fig5_cmd);
  CLI::App* ergo_cmd = app.add_subcommand("ergotropy-surface", "Steady-state ergotropy grid");
  add_output(ergo_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  auto logger = spdlog::stderr_color_mt("qcollide");
  spdlog::set_default_logger(logger);
  spdlog::set_level(opt.verbose ? spdlog::level::info : spdlog::level::warn);

  try {
    if (*run_cmd) return cmd_run(opt);
    if (*steady_cmd) return cmd_steady(opt);
    if (*sweep_cmd) return cmd_sweep(opt);
    if (*fig3_cmd) return cmd_fig3(opt);
    if (*fig5_cmd) return cmd_fig5(opt);
    if (*ergo_cmd) return cmd_ergotropy(opt);
  } catch (const ConfigError& e) {
    spdlog::error("config error: {}", e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    spdlog::error("numerical failure: {}", e.what());
    return kExitNumerical;
  }
  return kExitConfig;
}
