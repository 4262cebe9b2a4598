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

// Continuum limit of the collision model: the GKSL generator
//
//   L(ρ) = −i[Ĥ_S, ρ] + Σ_jk γ_jk (S_j ρ S_k† − ½{S_k† S_j, ρ}),
//   γ_jk = Tr[A_k† A_j ρ_A^th],
//
// obtained by writing the unscaled coupling as V = Σ_j S_j ⊗ A_j with S_j
// the Pauli matrices σ_x, σ_y, σ_z and A_j = Σ_m J_jm σ_m.

#pragma once

#include <vector>

#include "qcollide/linalg.hpp"
#include "qcollide/model.hpp"
#include "qcollide/observables.hpp"

namespace qcollide {

inline constexpr double kDegeneracyThreshold = 1e-8;

struct GKSLGenerator {
  HermitianMatrix h_sys = QubitHamiltonian{}.matrix();
  std::vector<Pauli> labels;         ///< which Pauli each jump is
  std::vector<ComplexMatrix> jumps;  ///< S_j
  ComplexMatrix rates;               ///< γ_jk, Hermitian PSD
};

/// Matrix acting on column-stacked operators: vec(ρ)[i + j·d] = ρ(i, j), so
/// vec(AρB) = (Bᵀ⊗A) vec(ρ).
struct Superoperator {
  ComplexMatrix matrix;

  Eigen::Index operator_dim() const;
};

ComplexVector vec(const ComplexMatrix& m);
ComplexMatrix unvec(const ComplexVector& v);

/// Rows of J without any nonzero entry are pruned from the jump list.
/// Throws ConfigError for couplings with scaling = none (no continuum limit).
GKSLGenerator build_generator(const CouplingSpec& coupling, const QubitHamiltonian& hs,
                              const AncillaPrep& ancilla);

ComplexMatrix apply_generator(const GKSLGenerator& gen, const ComplexMatrix& rho);
HermitianMatrix apply_generator(const GKSLGenerator& gen, const DensityMatrix& rho);

Superoperator vectorize(const GKSLGenerator& gen);
ComplexMatrix apply(const Superoperator& op, const ComplexMatrix& rho);

/// ρ* from the right-singular vector of the smallest singular value,
/// Hermitized and trace-normalized. When the two smallest singular values are
/// both below kDegeneracyThreshold the kernel is not one-dimensional: the
/// report is flagged degenerate and ρ* is the projection of the maximally
/// mixed state onto the numerical kernel.
SteadyStateReport steady_state_kernel(const Superoperator& op, const QubitHamiltonian& hs);

/// e^{tL} ρ₀ through expm() of the vectorized generator.
DensityMatrix evolve_continuous(const GKSLGenerator& gen, const DensityMatrix& rho0, double t);
DensityMatrix evolve_continuous(const Superoperator& op, const DensityMatrix& rho0, double t);

}  // namespace qcollide
