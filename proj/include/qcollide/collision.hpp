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

// Discrete repeated-interaction dynamics:
//
//   ρ_S((n+1)δt) = Tr_A[Û (ρ_S(nδt) ⊗ ρ_A^th) Û†]
//
// with a fresh thermal ancilla for every collision. Free evolution between
// collisions is not modelled.

#pragma once

#include <optional>
#include <vector>

#include "qcollide/lindblad.hpp"
#include "qcollide/model.hpp"
#include "qcollide/observables.hpp"
#include "qcollide/thermo.hpp"

namespace qcollide {

inline constexpr long kMaxSteadyStateCollisions = 1'000'000;

/// cos(15π/16)|e⟩ + sin(15π/16)|g⟩, the default initial system state.
DensityMatrix default_initial_state();

struct CollisionConfig {
  QubitHamiltonian hs;
  AncillaPrep ancilla;
  CouplingSpec coupling;
  long n_collisions = 1000;
  DensityMatrix rho0 = default_initial_state();
  bool record_joint = false;
  double convergence_tol = 1e-10;
  /// Truncate the trajectory at the first converged collision.
  bool stop_at_convergence = false;

  /// Throws ConfigError on an invalid configuration.
  void validate() const;
};

struct Trajectory {
  double dt = 0.0;
  /// ρ_S at t = 0, δt, 2δt, ...
  std::vector<DensityMatrix> states;
  ThermoLedger ledger;
  /// Index n ≥ 1 of the first collision with ‖ρ_n − ρ_{n−1}‖_tr < tol·δt.
  std::optional<long> converged_at;
  /// Joint post-collision states and entropy-production cross-checks; only
  /// filled when record_joint is set.
  std::vector<DensityMatrix> joints;
  std::vector<EntropyProduction> entropy_checks;
};

struct CollisionOutcome {
  DensityMatrix rho_s_next;
  DensityMatrix joint_after;
};

/// One collision. Throws NumericalError("invalid propagator") when u is not
/// unitary within kUnitaryTol.
CollisionOutcome collide_once(const DensityMatrix& rho_s, const DensityMatrix& rho_a,
                              const ComplexMatrix& u);

/// Deterministic trajectory with its thermodynamic ledger.
Trajectory run(const CollisionConfig& config);

/// Iterates the collision map from config.rho0 until the per-unit-time change
/// ‖ρ_{n+1} − ρ_n‖_tr / δt drops below tol. Throws NoSteadyStateError after
/// max_collisions.
SteadyStateReport steady_state_by_iteration(const CollisionConfig& config, double tol,
                                            long max_collisions = kMaxSteadyStateCollisions);

/// The single-collision channel Φ as a superoperator.
Superoperator collision_map(const CollisionConfig& config);

/// ρ_S after config.n_collisions collisions, via repeated squaring of Φ.
/// No ledger is kept.
DensityMatrix evolve_discrete(const CollisionConfig& config);

/// (Φ − id)/δt, the finite-δt generator whose kernel is the exact fixed point
/// of the discrete dynamics.
Superoperator collision_generator(const CollisionConfig& config);

std::vector<double> weak_coupling_sigma_rate(const Trajectory& traj, const QubitHamiltonian& hs,
                                             double beta);

}  // namespace qcollide
