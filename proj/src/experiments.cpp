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

#include "qcollide/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <thread>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "qcollide/error.hpp"

namespace qcollide {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr double kFigureDt = 0.05;
constexpr long kFigureCollisions = 1000;

double beta_eff_or_nan(const DensityMatrix& rho, double omega) {
  return omega == 0.0 ? kNan : effective_beta(rho, omega);
}

CollisionConfig figure_config(const CouplingSpec& coupling, double beta) {
  CollisionConfig c;
  c.coupling = coupling;
  c.ancilla = AncillaPrep{beta, 1.0};
  c.n_collisions = kFigureCollisions;
  return c;
}

// (ratio or alpha), n, t, ..., one row per collision n ≥ 1.
void append_trace_rows(Table& out, double label, const Trajectory& traj, bool with_pe) {
  const ThermoLedger& led = traj.ledger;
  for (std::size_t i = 0; i < led.size(); ++i) {
    const DensityMatrix& rho = traj.states[i + 1];
    std::vector<Cell> row = {label, static_cast<long long>(i + 1), double(i + 1) * traj.dt};
    row.push_back(with_pe ? rho.population(0) : l1_coherence(rho));
    for (double v : {led.work_rate(i), led.heat_rate(i), led.sigma_rate(i), led.total_work(i),
                     led.total_heat(i), led.total_sigma(i)})
      row.push_back(v);
    out.rows.push_back(std::move(row));
  }
}

std::vector<double> grid(int count, double start, double step) {
  std::vector<double> out(count);
  for (int k = 0; k < count; ++k) out[k] = start + k * step;
  return out;
}

}  // namespace

const std::vector<std::string>& trajectory_columns() {
  static const std::vector<std::string> cols = {
      "n",  "t",     "p_e",   "p_g", "re_coh", "im_coh", "beta_eff", "w",      "q",
      "de_s", "ds",  "sigma", "W",   "Q",      "Sigma",  "w_rate",   "q_rate", "sigma_rate"};
  return cols;
}

Table trajectory_table(const Trajectory& traj, const QubitHamiltonian& hs) {
  Table out;
  out.columns = trajectory_columns();
  out.rows.reserve(traj.states.size());
  const ThermoLedger& led = traj.ledger;
  for (std::size_t n = 0; n < traj.states.size(); ++n) {
    const DensityMatrix& rho = traj.states[n];
    std::vector<Cell> row = {static_cast<long long>(n), double(n) * traj.dt, rho.population(0),
                             rho.population(1), rho(0, 1).real(), rho(0, 1).imag(),
                             beta_eff_or_nan(rho, hs.omega)};
    if (n == 0) {
      row.insert(row.end(), 11, 0.0);
    } else {
      const std::size_t i = n - 1;
      for (double v : {led.w()[i], led.q()[i], led.de_s()[i], led.ds()[i], led.sigma()[i],
                       led.total_work(i), led.total_heat(i), led.total_sigma(i), led.work_rate(i),
                       led.heat_rate(i), led.sigma_rate(i)})
        row.push_back(v);
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

Table run_table(const RunConfig& config) {
  const CollisionConfig cc = config.collision_config();
  Table table = trajectory_table(run(cc), cc.hs);
  if (config.output.quantities.empty()) return table;
  return table.select(config.output.quantities);
}

SteadyChoice parse_steady_choice(std::string_view name) {
  if (name == "kernel") return SteadyChoice::kKernel;
  if (name == "iteration") return SteadyChoice::kIteration;
  if (name == "both") return SteadyChoice::kBoth;
  throw ConfigError(fmt::format("unknown steady-state method '{}'", name));
}

Superoperator steady_generator(const CollisionConfig& config) {
  if (config.coupling.scaling == Scaling::kSqrtDt) {
    return vectorize(build_generator(config.coupling, config.hs, config.ancilla));
  }
  return collision_generator(config);
}

SteadyCurrents steady_currents(const CollisionConfig& config, const DensityMatrix& rho) {
  SteadyCurrents out;
  const double beta = config.ancilla.beta;
  if (config.coupling.scaling == Scaling::kSqrtDt) {
    out.work = work_current(config.coupling, config.hs, config.ancilla, rho);
    out.heat = heat_current(config.coupling, config.ancilla, rho);
    out.sigma = std::isinf(beta) ? kNan : beta * out.heat;
    return out;
  }
  const QubitHamiltonian ha = config.ancilla.hamiltonian();
  const HermitianMatrix hsa = build_interaction(config.coupling);
  const ComplexMatrix u = collision_unitary(config.hs, ha, hsa, config.coupling.dt);
  const DensityMatrix rho_a = gibbs_state(ha, beta);
  const CollisionOutcome step = collide_once(rho, rho_a, u);
  const double dt = config.coupling.dt;
  out.work = collision_work(u, hsa, rho, rho_a) / dt;
  out.heat = collision_heat(u, ha.matrix(), rho, rho_a) / dt;
  out.sigma = entropy_production_collision(rho, step.joint_after, config.ancilla, false).sigma / dt;
  return out;
}

SteadyStateReport solve_steady(const CollisionConfig& config, SteadyStateMethod method) {
  if (method == SteadyStateMethod::kIteration) {
    return steady_state_by_iteration(config, config.convergence_tol);
  }
  SteadyStateReport report = steady_state_kernel(steady_generator(config), config.hs);
  if (!report.degenerate) return report;
  spdlog::info("degenerate kernel; using iteration from the configured initial state");
  SteadyStateReport seeded = steady_state_by_iteration(config, config.convergence_tol);
  seeded.degenerate = true;
  seeded.note = report.note;
  return seeded;
}

Table steady_table(const RunConfig& config, SteadyChoice choice) {
  const CollisionConfig cc = config.collision_config();
  std::vector<SteadyStateReport> reports;
  if (choice != SteadyChoice::kIteration) reports.push_back(solve_steady(cc, SteadyStateMethod::kKernel));
  if (choice != SteadyChoice::kKernel) reports.push_back(solve_steady(cc, SteadyStateMethod::kIteration));
  const double distance =
      reports.size() == 2 ? trace_distance(reports[0].rho_star, reports[1].rho_star) : kNan;

  Table out;
  out.columns = {"method",      "p_e",          "p_g",       "re_coh",     "im_coh",
                 "beta_eff",    "coherence_l1", "ergotropy", "residual",   "degenerate",
                 "w_rate",      "q_rate",       "sigma_rate", "method_distance", "note"};
  for (const SteadyStateReport& r : reports) {
    const DensityMatrix& rho = r.rho_star;
    const SteadyCurrents cur = steady_currents(cc, rho);
    out.rows.push_back({std::string(to_string(r.method)), rho.population(0), rho.population(1),
                        rho(0, 1).real(), rho(0, 1).imag(), r.beta_eff.value_or(kNan),
                        r.coherence_l1, r.ergotropy, r.residual,
                        static_cast<long long>(r.degenerate), cur.work, cur.heat, cur.sigma,
                        distance, r.note});
  }
  if (config.output.quantities.empty()) return out;
  return out.select(config.output.quantities);
}

std::vector<double> fig3_ratio_grid() {
  std::vector<double> out;
  for (int k = -30; k <= 30; ++k) out.push_back(k / 10.0);
  return out;
}

std::vector<double> fig5_alpha_grid() { return grid(64, 0.0, kPi / 128.0); }
std::vector<double> ergotropy_alpha_grid() { return grid(32, 0.0, kPi / 64.0); }
std::vector<double> ergotropy_gamma_grid() { return grid(33, -kPi / 2.0, kPi / 32.0); }

CouplingSpec fig5_coupling(double alpha) {
  return ssc_coupling(1.0, 0.5, std::sqrt(1.25) * std::tan(alpha), kFigureDt);
}

Fig3Data fig3() {
  Fig3Data data;
  data.ratio_scan.columns = {"beta", "ratio", "beta_eff", "beta_eff_over_beta"};
  for (double beta : kFig3Betas) {
    for (double ratio : fig3_ratio_grid()) {
      const CollisionConfig cc = figure_config(diagonal_coupling(1.0, ratio, kFigureDt), beta);
      const SteadyStateReport r = steady_state_kernel(steady_generator(cc), cc.hs);
      const double b = r.beta_eff.value_or(kNan);
      data.ratio_scan.rows.push_back({beta, ratio, b, b / beta});
    }
  }

  data.traces.columns = {"ratio", "n", "t", "p_e", "w_rate", "q_rate", "sigma_rate", "W", "Q", "Sigma"};
  data.steady.columns = {"ratio", "beta_eff", "w_rate", "q_rate", "sigma_rate"};
  for (double ratio : kFig3TraceRatios) {
    const CollisionConfig cc = figure_config(diagonal_coupling(1.0, ratio, kFigureDt), 1.0);
    append_trace_rows(data.traces, ratio, run(cc), true);
    const SteadyStateReport r = steady_state_kernel(steady_generator(cc), cc.hs);
    const SteadyCurrents cur = steady_currents(cc, r.rho_star);
    data.steady.rows.push_back({ratio, r.beta_eff.value_or(kNan), cur.work, cur.heat, cur.sigma});
  }
  return data;
}

Fig5Data fig5() {
  Fig5Data data;
  data.coherence.columns = {"beta", "k", "alpha", "coherence", "ergotropy"};
  const std::vector<double> alphas = fig5_alpha_grid();
  for (double beta : kAllBetas) {
    for (std::size_t k = 0; k < alphas.size(); ++k) {
      const CollisionConfig cc = figure_config(fig5_coupling(alphas[k]), beta);
      const SteadyStateReport r = steady_state_kernel(steady_generator(cc), cc.hs);
      data.coherence.rows.push_back(
          {beta, static_cast<long long>(k), alphas[k], r.coherence_l1, r.ergotropy});
    }
  }

  data.traces.columns = {"alpha", "n", "t", "coherence", "w_rate", "q_rate", "sigma_rate", "W", "Q", "Sigma"};
  for (double alpha : {0.0, kPi / 8.0, kPi / 4.0, 3.0 * kPi / 8.0}) {
    append_trace_rows(data.traces, alpha, run(figure_config(fig5_coupling(alpha), 1.0)), false);
  }
  return data;
}

ErgotropyData ergotropy_surface() {
  const DensityMatrix ground = bloch_state(0.0, 0.0, -1.0);
  const DensityMatrix excited = bloch_state(0.0, 0.0, 1.0);
  const std::array<std::pair<const char*, const DensityMatrix*>, 2> starts = {
      std::pair{"g", &ground}, std::pair{"e", &excited}};
  const HermitianMatrix hs = QubitHamiltonian{}.matrix();

  ErgotropyData data;
  data.surface.columns = {"alpha", "gamma", "rho0", "ergotropy", "p_e", "coherence"};
  for (double alpha : ergotropy_alpha_grid()) {
    for (double gamma : ergotropy_gamma_grid()) {
      for (const auto& [name, rho0] : starts) {
        CollisionConfig cc = figure_config(ssc_to_coupling({alpha, gamma, 1.0}, kFigureDt), 1.0);
        cc.rho0 = *rho0;
        const DensityMatrix rho = evolve_discrete(cc);
        data.surface.rows.push_back({alpha, gamma, std::string(name), ergotropy(rho, hs),
                                     rho.population(0), l1_coherence(rho)});
      }
    }
  }

  data.slice.columns = {"beta", "alpha", "rho0", "ergotropy"};
  for (double beta : kAllBetas) {
    for (double alpha : ergotropy_alpha_grid()) {
      for (const auto& [name, rho0] : starts) {
        CollisionConfig cc = figure_config(ssc_to_coupling({alpha, 0.0, 1.0}, kFigureDt), beta);
        cc.rho0 = *rho0;
        data.slice.rows.push_back({beta, alpha, std::string(name), ergotropy(evolve_discrete(cc), hs)});
      }
    }
  }
  return data;
}

SweepOutcome run_sweep(const SweepConfig& config, int parallel) {
  if (parallel < 1) throw ConfigError("parallelism must be at least 1");
  const std::size_t total = config.size();
  std::vector<std::optional<Table>> results(total);
  std::vector<std::string> failures(total);

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      try {
        const RunConfig rc = config.point_config(i);
        Table t = run_table(rc);
        if (config.rows == SweepRows::kFinal && !t.rows.empty()) {
          t.rows.erase(t.rows.begin(), t.rows.end() - 1);
        }
        results[i] = std::move(t);
      } catch (const std::exception& e) {
        failures[i] = e.what();
        spdlog::warn("sweep point {} failed: {}", i, e.what());
      }
    }
  };
  const int threads = static_cast<int>(std::min<std::size_t>(parallel, std::max<std::size_t>(total, 1)));
  std::vector<std::thread> pool;
  for (int k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  SweepOutcome out;
  std::vector<std::string> prefix = {"point"};
  for (const SweepAxis& axis : config.axes) prefix.push_back(axis.path);
  out.errors.columns = prefix;
  out.errors.columns.push_back("error");

  for (std::size_t i = 0; i < total; ++i) {
    std::vector<Cell> head = {static_cast<long long>(i)};
    for (double v : config.point(i)) head.push_back(v);
    if (!results[i]) {
      head.push_back(failures[i]);
      out.errors.rows.push_back(std::move(head));
      continue;
    }
    if (out.merged.columns.empty()) {
      out.merged.columns = prefix;
      out.merged.columns.insert(out.merged.columns.end(), results[i]->columns.begin(),
                                results[i]->columns.end());
    }
    for (const auto& row : results[i]->rows) {
      std::vector<Cell> merged = head;
      merged.insert(merged.end(), row.begin(), row.end());
      out.merged.rows.push_back(std::move(merged));
    }
  }
  if (out.merged.columns.empty()) out.merged.columns = prefix;
  return out;
}

}  // namespace qcollide
