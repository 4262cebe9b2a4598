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

// Physical ingredients of the qubit collision model.
//
// Qubit basis order is (|e⟩, |g⟩): σ_z = diag(+1, −1) and the free
// Hamiltonian (ω/2)σ_z puts the excited level first.

#pragma once

#include <array>
#include <limits>

#include "qcollide/linalg.hpp"

namespace qcollide {

enum class Pauli { kX = 0, kY = 1, kZ = 2 };

/// σ_x, σ_y or σ_z in the (|e⟩, |g⟩) basis.
const ComplexMatrix& pauli(Pauli p);
ComplexMatrix identity2();

/// Ĥ = (ω/2) σ_z, ħ = 1.
struct QubitHamiltonian {
  double omega = 1.0;

  HermitianMatrix matrix() const;
};

inline constexpr double kInfiniteBeta = std::numeric_limits<double>::infinity();

/// Thermal preparation of every ancilla: inverse temperature β ∈ [−∞, +∞]
/// and the ancilla frequency ω_A.
struct AncillaPrep {
  double beta = 1.0;
  double omega_a = 1.0;

  QubitHamiltonian hamiltonian() const { return {omega_a}; }
  /// Throws ConfigError when beta is NaN or omega_a is not finite.
  void validate() const;
};

enum class Scaling {
  kSqrtDt,  ///< Ĥ_SA = δt^{−1/2} Σ J_lm σ_l⊗σ_m (continuum limit exists)
  kNone,    ///< Ĥ_SA = Σ J_lm σ_l⊗σ_m
};

/// Coefficients J_lm of Σ J_lm σ_l⊗σ_m over (x, y, z)×(x, y, z), with the
/// collision duration δt. The J_lm are the δt-independent (g₀-level)
/// constants; the δt^{−1/2} factor is applied by build_interaction.
struct CouplingSpec {
  std::array<std::array<double, 3>, 3> j{};
  double dt = 0.05;
  Scaling scaling = Scaling::kSqrtDt;

  double& at(Pauli sys, Pauli anc) { return j[int(sys)][int(anc)]; }
  double at(Pauli sys, Pauli anc) const { return j[int(sys)][int(anc)]; }

  /// Prefactor s multiplying Σ J_lm σ_l⊗σ_m.
  double scale() const;
  bool is_zero() const;
  /// Throws ConfigError unless dt > 0 and every J_lm is finite.
  void validate() const;
};

/// J_x σ_x⊗σ_x + J_y σ_y⊗σ_y.
CouplingSpec diagonal_coupling(double jx, double jy, double dt,
                               Scaling scaling = Scaling::kSqrtDt);

/// J_x σ_x⊗σ_x + J_y σ_y⊗σ_y + J_zy σ_z⊗σ_y, the coherence-generating family.
CouplingSpec ssc_coupling(double jx, double jy, double jzy, double dt,
                          Scaling scaling = Scaling::kSqrtDt);

/// Angular parameterization of the coherence-generating family:
/// J_x = m cos α cos γ, J_y = m cos α sin γ, J_zy = m sin α.
struct SscAngles {
  double alpha = 0.0;
  double gamma = 0.0;
  double magnitude = 1.0;
};

CouplingSpec ssc_to_coupling(const SscAngles& angles, double dt,
                             Scaling scaling = Scaling::kSqrtDt);

/// Inverse of ssc_to_coupling: α = atan(J_zy / √(J_x²+J_y²)), γ = atan2(J_y, J_x).
SscAngles coupling_to_ssc(const CouplingSpec& spec);

/// e^{−βH}/Tr e^{−βH}. Infinite β selects the extremal eigenspace and throws
/// Error("ill-defined zero-temperature limit") when that eigenspace is degenerate.
DensityMatrix gibbs_state(const HermitianMatrix& h, double beta);
DensityMatrix gibbs_state(const QubitHamiltonian& h, double beta);

/// Σ J_lm σ_l⊗σ_m without the δt scaling (the operator V̂ of the continuum limit).
HermitianMatrix interaction_operator(const CouplingSpec& spec);

/// s · Σ J_lm σ_l⊗σ_m with s set by spec.scaling.
HermitianMatrix build_interaction(const CouplingSpec& spec);

/// True when Tr_A[V (I ⊗ ρ_A)] vanishes, i.e. the first ancilla moment of the
/// coupling is zero for the given (diagonal) ancilla state.
bool first_moment_vanishes(const CouplingSpec& spec, const DensityMatrix& rho_a,
                           double atol = 1e-12);

/// Ĥ_S⊗I + I⊗Ĥ_A + hsa.
HermitianMatrix total_hamiltonian(const QubitHamiltonian& hs, const QubitHamiltonian& ha,
                                  const HermitianMatrix& hsa);

/// Û(δt) = exp(−iδt(Ĥ_S + Ĥ_A + Ĥ_SA)).
ComplexMatrix collision_unitary(const QubitHamiltonian& hs, const QubitHamiltonian& ha,
                                const HermitianMatrix& hsa, double dt);

/// Bloch-vector state ½(I + r·σ); throws ConfigError when |r| > 1 + 1e−12.
DensityMatrix bloch_state(double x, double y, double z);

/// cos θ|e⟩ + sin θ|g⟩.
DensityMatrix theta_state(double theta);

}  // namespace qcollide
