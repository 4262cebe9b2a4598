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

#include "qcollide/observables.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qcollide/error.hpp"

namespace qcollide {

const char* to_string(SteadyStateMethod method) {
  return method == SteadyStateMethod::kKernel ? "kernel" : "iteration";
}

double effective_beta(const DensityMatrix& rho, double omega_s) {
  if (rho.dim() != 2) throw Error("effective_beta: qubit state required");
  if (omega_s == 0.0) throw Error("effective_beta: degenerate Hamiltonian (omega_s = 0)");
  const double p_e = rho.population(0);
  const double p_g = rho.population(1);
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (p_e <= 0.0) return omega_s > 0 ? inf : -inf;
  if (p_g <= 0.0) return omega_s > 0 ? -inf : inf;
  return std::log(p_g / p_e) / omega_s;
}

double l1_coherence(const DensityMatrix& rho) {
  double acc = 0.0;
  for (Eigen::Index r = 0; r < rho.dim(); ++r)
    for (Eigen::Index c = 0; c < rho.dim(); ++c)
      if (r != c) acc += std::abs(rho(r, c));
  return acc;
}

double ergotropy(const DensityMatrix& rho, const HermitianMatrix& h) {
  if (rho.dim() != h.dim()) throw Error("ergotropy: dimension mismatch");
  const RealVector populations = herm_eig(rho.hermitian()).values;  // ascending
  const RealVector energies = herm_eig(h).values;                   // ascending
  const Eigen::Index n = populations.size();
  double passive_energy = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) passive_energy += populations[n - 1 - k] * energies[k];
  const double energy = trace_product(rho.matrix(), h.matrix()).real();
  return std::max(0.0, energy - passive_energy);
}

bool is_passive(const DensityMatrix& rho, const HermitianMatrix& h, double tol) {
  return ergotropy(rho, h) <= tol;
}

SteadyStateReport make_report(const DensityMatrix& rho_star, const QubitHamiltonian& hs,
                              double residual, bool degenerate, SteadyStateMethod method) {
  SteadyStateReport report;
  report.rho_star = rho_star;
  report.coherence_l1 = l1_coherence(rho_star);
  report.ergotropy = ergotropy(rho_star, hs.matrix());
  report.residual = residual;
  report.degenerate = degenerate;
  report.method = method;
  if (report.coherence_l1 <= kCoherenceThreshold && hs.omega != 0.0) {
    report.beta_eff = effective_beta(rho_star, hs.omega);
  }
  if (degenerate) report.note = "non-unique steady state; initial-state dependent";
  return report;
}

}  // namespace qcollide
