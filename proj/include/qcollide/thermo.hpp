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

// Thermodynamic bookkeeping for single collisions and their continuum limit.
//
// Sign conventions, used everywhere in this library:
//   W  energy injected by the agent switching the interaction on and off,
//      W = Tr[(Ĥ_SA − Û†Ĥ_SAÛ)(ρ_S⊗ρ_A)]
//   Q  energy gained by the ancilla, Q = Tr[(Û†Ĥ_AÛ − Ĥ_A)(ρ_S⊗ρ_A)]
//   ΔE_S = W − Q holds exactly for every collision.
//   ΔS = S(after) − S(before) and Σ = ΔS + βQ, in nats.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcollide/linalg.hpp"
#include "qcollide/model.hpp"

namespace qcollide {

/// Per-collision thermodynamic increments.
struct CollisionThermo {
  double w = 0.0;
  double q = 0.0;
  double de_s = 0.0;
  double ds = 0.0;
  double sigma = 0.0;
};

/// Per-collision increments with running sums. Rates are increments divided by dt.
class ThermoLedger {
 public:
  ThermoLedger() = default;
  explicit ThermoLedger(double dt) : dt_(dt) {}

  void record(const CollisionThermo& entry);

  std::size_t size() const { return w_.size(); }
  double dt() const { return dt_; }

  const std::vector<double>& w() const { return w_; }
  const std::vector<double>& q() const { return q_; }
  const std::vector<double>& de_s() const { return de_s_; }
  const std::vector<double>& ds() const { return ds_; }
  const std::vector<double>& sigma() const { return sigma_; }

  /// Cumulative W, Q, Σ after collision i (0-based).
  double total_work(std::size_t i) const { return total_w_[i]; }
  double total_heat(std::size_t i) const { return total_q_[i]; }
  double total_sigma(std::size_t i) const { return total_sigma_[i]; }

  double work_rate(std::size_t i) const { return w_[i] / dt_; }
  double heat_rate(std::size_t i) const { return q_[i] / dt_; }
  double sigma_rate(std::size_t i) const { return sigma_[i] / dt_; }

 private:
  double dt_ = 1.0;
  std::vector<double> w_, q_, de_s_, ds_, sigma_;
  std::vector<double> total_w_, total_q_, total_sigma_;
};

double collision_work(const ComplexMatrix& u, const HermitianMatrix& h_sa,
                      const DensityMatrix& rho_s, const DensityMatrix& rho_a);

/// h_a is the 2×2 ancilla Hamiltonian; it is lifted to I⊗Ĥ_A internally.
double collision_heat(const ComplexMatrix& u, const HermitianMatrix& h_a,
                      const DensityMatrix& rho_s, const DensityMatrix& rho_a);

/// Continuum work current Tr[(V H₀ V − ½{V², H₀})(ρ_S⊗ρ_A^th)] with V the
/// unscaled interaction and H₀ = Ĥ_S + Ĥ_A.
double work_current(const CouplingSpec& coupling, const QubitHamiltonian& hs,
                    const AncillaPrep& ancilla, const DensityMatrix& rho_s);

/// Same current through −½ Tr[[V, [V, H₀]] ρ]; an independent algebraic route.
double work_current_double_commutator(const CouplingSpec& coupling, const QubitHamiltonian& hs,
                                      const AncillaPrep& ancilla, const DensityMatrix& rho_s);

/// Continuum heat current Tr[(V Ĥ_A V − ½{V², Ĥ_A})(ρ_S⊗ρ_A^th)].
double heat_current(const CouplingSpec& coupling, const AncillaPrep& ancilla,
                    const DensityMatrix& rho_s);

double von_neumann_entropy(const DensityMatrix& rho);

/// D(ρ‖σ) = Tr ρ(ln ρ − ln σ); +∞ when supp ρ ⊄ supp σ.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// S(ρ_S) + S(ρ_A) − S(ρ_SA).
double mutual_information(const DensityMatrix& joint, Factorization dims);

/// Entropy production of one collision and its two alternative evaluations.
struct EntropyProduction {
  double sigma = 0.0;  ///< ΔS_sys + βQ
  double delta_s = 0.0;
  double heat = 0.0;
  std::optional<double> joint_relative_entropy;  ///< D(ρ_SA'‖ρ_S'⊗ρ_A^th)
  std::optional<double> correlation_form;        ///< I(S:A)' + D(ρ_A'‖ρ_A^th)
  std::string skipped_reason;
};

/// With with_checks=false only the definition is evaluated.
EntropyProduction entropy_production_collision(const DensityMatrix& rho_s_before,
                                               const DensityMatrix& joint_after,
                                               const AncillaPrep& ancilla,
                                               bool with_checks = true);

/// Diagnostic weak-coupling rate −d/dt D(ρ_S(t)‖ρ_S^th(β)) by central
/// differences (one-sided at the ends) on states sampled every dt.
std::vector<double> weak_coupling_sigma_rate(const std::vector<DensityMatrix>& states, double dt,
                                             const QubitHamiltonian& hs, double beta);

}  // namespace qcollide
