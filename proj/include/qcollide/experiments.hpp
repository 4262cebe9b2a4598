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

// Table-producing drivers behind the CLI subcommands: single runs, steady
// states, sweeps and the canned figure experiments.

#pragma once

#include <string_view>
#include <vector>

#include "qcollide/collision.hpp"
#include "qcollide/config.hpp"
#include "qcollide/lindblad.hpp"
#include "qcollide/table.hpp"

namespace qcollide {

/// n, t, p_e, p_g, re_coh, im_coh, beta_eff, w, q, de_s, ds, sigma, W, Q,
/// Sigma, w_rate, q_rate, sigma_rate. Row n = 0 is the initial state with
/// zero per-collision entries.
const std::vector<std::string>& trajectory_columns();
Table trajectory_table(const Trajectory& traj, const QubitHamiltonian& hs);

/// Runs the configuration and keeps output.quantities (all columns if empty).
Table run_table(const RunConfig& config);

enum class SteadyChoice { kKernel, kIteration, kBoth };
SteadyChoice parse_steady_choice(std::string_view name);

/// GKSL generator for sqrt_dt scaling; the finite-δt collision generator
/// when the coupling has no continuum limit.
Superoperator steady_generator(const CollisionConfig& config);

struct SteadyCurrents {
  double work = 0.0;
  double heat = 0.0;
  double sigma = 0.0;
};

/// Continuum currents at ρ (sqrt_dt), or one collision's W/δt, Q/δt, Σ/δt.
/// With ΔS = 0 at a steady state the continuum σ-rate is β·Q̇.
SteadyCurrents steady_currents(const CollisionConfig& config, const DensityMatrix& rho);

/// Kernel solution, falling back to iteration from config.rho0 when the
/// kernel is degenerate; the fallback keeps the degenerate flag and note.
SteadyStateReport solve_steady(const CollisionConfig& config, SteadyStateMethod method);

Table steady_table(const RunConfig& config, SteadyChoice choice);

// Figure experiments. Every trajectory uses δt = 0.05, n = 1000, ω_S = ω_A = 1
// and starts from default_initial_state() unless noted.

inline constexpr std::array<double, 5> kFig3Betas = {1.0, 3.0, 5.0, 7.0, 9.0};
inline constexpr std::array<double, 4> kFig3TraceRatios = {-0.5, 0.0, 0.5, 1.0};
inline constexpr std::array<double, 9> kAllBetas = {1, 2, 3, 4, 5, 6, 7, 8, 9};

/// J_y/J_x ∈ [−3, 3] in steps of 0.1 (61 points).
std::vector<double> fig3_ratio_grid();
/// α = kπ/128, k = 0..63.
std::vector<double> fig5_alpha_grid();
/// α = kπ/64, k = 0..31.
std::vector<double> ergotropy_alpha_grid();
/// γ = −π/2 + mπ/32, m = 0..32.
std::vector<double> ergotropy_gamma_grid();

/// J_x = 1, J_y = 1/2, J_zy = √(5/4)·tan α, so that α is the angle between
/// the (J_x, J_y) and J_zy components.
CouplingSpec fig5_coupling(double alpha);

struct Fig3Data {
  Table ratio_scan;  ///< beta, ratio, beta_eff, beta_eff_over_beta (GKSL kernel)
  Table traces;      ///< ratio, n, t, p_e, w_rate, q_rate, sigma_rate, W, Q, Sigma
  Table steady;      ///< ratio, beta_eff, w_rate, q_rate, sigma_rate (GKSL kernel)
};
Fig3Data fig3();

struct Fig5Data {
  Table coherence;  ///< beta, k, alpha, coherence, ergotropy (GKSL kernel)
  Table traces;     ///< alpha, n, t, coherence, w_rate, q_rate, sigma_rate, W, Q, Sigma
};
Fig5Data fig5();

struct ErgotropyData {
  Table surface;  ///< alpha, gamma, rho0, ergotropy, p_e, coherence (β = 1)
  Table slice;    ///< beta, alpha, rho0, ergotropy at γ = 0
};
/// Unit-magnitude SSC couplings, rho0 ∈ {|g⟩, |e⟩}, state after n = 1000
/// collisions.
ErgotropyData ergotropy_surface();

struct SweepOutcome {
  Table merged;  ///< point, axis values, then the selected run columns
  Table errors;  ///< point, axis values, error
};

/// Points run on `parallel` threads; rows are merged in point order.
SweepOutcome run_sweep(const SweepConfig& config, int parallel);

}  // namespace qcollide
