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

#include "qcollide/thermo.hpp"

#include <cmath>
#include <limits>

#include <spdlog/spdlog.h>

#include "qcollide/error.hpp"

namespace qcollide {

namespace {

constexpr double kSupportTol = 1e-14;
constexpr double kInf = std::numeric_limits<double>::infinity();

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

ComplexMatrix product_state(const DensityMatrix& rho_s, const DensityMatrix& rho_a) {
  return kron(rho_s.matrix(), rho_a.matrix());
}

// Tr[(V H V − ½{V², H}) ρ].
double dissipative_expectation(const ComplexMatrix& v, const ComplexMatrix& h,
                               const ComplexMatrix& rho) {
  const ComplexMatrix v2 = v * v;
  const ComplexMatrix op = v * h * v - 0.5 * (v2 * h + h * v2);
  return trace_product(op, rho).real();
}

}  // namespace

void ThermoLedger::record(const CollisionThermo& entry) {
  const double prev_w = total_w_.empty() ? 0.0 : total_w_.back();
  const double prev_q = total_q_.empty() ? 0.0 : total_q_.back();
  const double prev_s = total_sigma_.empty() ? 0.0 : total_sigma_.back();
  w_.push_back(entry.w);
  q_.push_back(entry.q);
  de_s_.push_back(entry.de_s);
  ds_.push_back(entry.ds);
  sigma_.push_back(entry.sigma);
  total_w_.push_back(prev_w + entry.w);
  total_q_.push_back(prev_q + entry.q);
  total_sigma_.push_back(prev_s + entry.sigma);
}

double collision_work(const ComplexMatrix& u, const HermitianMatrix& h_sa,
                      const DensityMatrix& rho_s, const DensityMatrix& rho_a) {
  const ComplexMatrix& h = h_sa.matrix();
  const ComplexMatrix change = h - u.adjoint() * h * u;
  return trace_product(change, product_state(rho_s, rho_a)).real();
}

double collision_heat(const ComplexMatrix& u, const HermitianMatrix& h_a,
                      const DensityMatrix& rho_s, const DensityMatrix& rho_a) {
  const ComplexMatrix lifted = kron(identity2(), h_a.matrix());
  const ComplexMatrix change = u.adjoint() * lifted * u - lifted;
  return trace_product(change, product_state(rho_s, rho_a)).real();
}

double work_current(const CouplingSpec& coupling, const QubitHamiltonian& hs,
                    const AncillaPrep& ancilla, const DensityMatrix& rho_s) {
  const ComplexMatrix v = interaction_operator(coupling).matrix();
  const ComplexMatrix h0 = kron(hs.matrix().matrix(), identity2()) +
                           kron(identity2(), ancilla.hamiltonian().matrix().matrix());
  const DensityMatrix rho_a = gibbs_state(ancilla.hamiltonian(), ancilla.beta);
  return dissipative_expectation(v, h0, product_state(rho_s, rho_a));
}

double work_current_double_commutator(const CouplingSpec& coupling, const QubitHamiltonian& hs,
                                      const AncillaPrep& ancilla, const DensityMatrix& rho_s) {
  const ComplexMatrix v = interaction_operator(coupling).matrix();
  const ComplexMatrix h0 = kron(hs.matrix().matrix(), identity2()) +
                           kron(identity2(), ancilla.hamiltonian().matrix().matrix());
  const ComplexMatrix inner = v * h0 - h0 * v;
  const ComplexMatrix outer = v * inner - inner * v;
  const DensityMatrix rho_a = gibbs_state(ancilla.hamiltonian(), ancilla.beta);
  return -0.5 * trace_product(outer, product_state(rho_s, rho_a)).real();
}

double heat_current(const CouplingSpec& coupling, const AncillaPrep& ancilla,
                    const DensityMatrix& rho_s) {
  const ComplexMatrix v = interaction_operator(coupling).matrix();
  const ComplexMatrix ha = kron(identity2(), ancilla.hamiltonian().matrix().matrix());
  const DensityMatrix rho_a = gibbs_state(ancilla.hamiltonian(), ancilla.beta);
  return dissipative_expectation(v, ha, product_state(rho_s, rho_a));
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return -matrix_functional(rho, xlogx);
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw Error("relative_entropy: dimension mismatch");
  const HermitianEigen eig = herm_eig(sigma.hermitian());
  double cross = 0.0;       // Tr ρ ln σ on supp σ
  double off_support = 0.0;  // weight of ρ outside supp σ
  for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
    const ComplexVector w = eig.vectors.col(k);
    const double weight = (w.adjoint() * rho.matrix() * w)(0, 0).real();
    if (eig.values[k] > kSupportTol) {
      cross += weight * std::log(eig.values[k]);
    } else {
      off_support += weight;
    }
  }
  if (off_support > 1e-12) return kInf;
  return matrix_functional(rho, xlogx) - cross;
}

double mutual_information(const DensityMatrix& joint, Factorization dims) {
  const DensityMatrix rs = partial_trace(joint, dims, Subsystem::kSystem);
  const DensityMatrix ra = partial_trace(joint, dims, Subsystem::kAncilla);
  return von_neumann_entropy(rs) + von_neumann_entropy(ra) - von_neumann_entropy(joint);
}

EntropyProduction entropy_production_collision(const DensityMatrix& rho_s_before,
                                               const DensityMatrix& joint_after,
                                               const AncillaPrep& ancilla,
                                               bool with_checks) {
  if (rho_s_before.dim() != 2 || joint_after.dim() != 4) {
    throw Error("entropy_production_collision: expected a qubit and a qubit pair");
  }
  const Factorization dims{2, 2};
  const DensityMatrix rs_after = partial_trace(joint_after, dims, Subsystem::kSystem);
  const DensityMatrix ra_after = partial_trace(joint_after, dims, Subsystem::kAncilla);
  const QubitHamiltonian ha = ancilla.hamiltonian();
  const DensityMatrix rho_th = gibbs_state(ha, ancilla.beta);

  EntropyProduction out;
  out.delta_s = von_neumann_entropy(rs_after) - von_neumann_entropy(rho_s_before);
  out.heat = trace_product(ha.matrix().matrix(), ra_after.matrix() - rho_th.matrix()).real();

  const DensityMatrix reference(HermitianMatrix::hermitize(kron(rs_after.matrix(), rho_th.matrix())));
  if (std::isinf(ancilla.beta)) {
    out.sigma = relative_entropy(joint_after, reference);
    out.skipped_reason = "infinite beta: thermal ancilla is pure, beta*Q is undefined";
    spdlog::debug("entropy production: identity checks skipped ({})", out.skipped_reason);
    return out;
  }
  out.sigma = out.delta_s + ancilla.beta * out.heat;
  if (with_checks) {
    out.joint_relative_entropy = relative_entropy(joint_after, reference);
    out.correlation_form =
        mutual_information(joint_after, dims) + relative_entropy(ra_after, rho_th);
  }
  return out;
}

std::vector<double> weak_coupling_sigma_rate(const std::vector<DensityMatrix>& states, double dt,
                                             const QubitHamiltonian& hs, double beta) {
  const std::size_t n = states.size();
  std::vector<double> rates(n, 0.0);
  if (n < 2) return rates;
  const DensityMatrix thermal = gibbs_state(hs, beta);
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = relative_entropy(states[i], thermal);
  rates[0] = -(d[1] - d[0]) / dt;
  rates[n - 1] = -(d[n - 1] - d[n - 2]) / dt;
  for (std::size_t i = 1; i + 1 < n; ++i) rates[i] = -(d[i + 1] - d[i - 1]) / (2.0 * dt);
  return rates;
}

}  // namespace qcollide
