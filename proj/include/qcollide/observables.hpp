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

#pragma once

#include <optional>
#include <string>

#include "qcollide/linalg.hpp"
#include "qcollide/model.hpp"

namespace qcollide {

/// Coherence above which a steady state is not reported with an effective
/// temperature.
inline constexpr double kCoherenceThreshold = 1e-6;

enum class SteadyStateMethod { kKernel, kIteration };

const char* to_string(SteadyStateMethod method);

struct SteadyStateReport {
  DensityMatrix rho_star = DensityMatrix::maximally_mixed(2);
  std::optional<double> beta_eff;
  double coherence_l1 = 0.0;
  double ergotropy = 0.0;
  double residual = 0.0;
  bool degenerate = false;
  SteadyStateMethod method = SteadyStateMethod::kKernel;
  std::string note;
};

/// (1/ω_S) ln(p_g/p_e). Returns ±∞ when a population vanishes and throws
/// Error when ω_S = 0.
double effective_beta(const DensityMatrix& rho, double omega_s);

/// Σ_{l≠m} |ρ_lm| in the computational (energy) basis.
double l1_coherence(const DensityMatrix& rho);

/// Tr[ρH] − Tr[ρ_passive H]; the passive state pairs the eigenvalues of ρ in
/// descending order with the energies in ascending order.
double ergotropy(const DensityMatrix& rho, const HermitianMatrix& h);

bool is_passive(const DensityMatrix& rho, const HermitianMatrix& h, double tol = 1e-10);

/// Fills the derived observables for a steady state of a qubit with Ĥ_S.
SteadyStateReport make_report(const DensityMatrix& rho_star, const QubitHamiltonian& hs,
                              double residual, bool degenerate, SteadyStateMethod method);

}  // namespace qcollide
