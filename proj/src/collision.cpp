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

#include "qcollide/collision.hpp"

#include <cmath>
#include <numbers>

#include "qcollide/error.hpp"

namespace qcollide {

namespace {

ComplexMatrix apply_channel(const ComplexMatrix& rho_s, const ComplexMatrix& rho_a,
                            const ComplexMatrix& u) {
  return u * kron(rho_s, rho_a) * u.adjoint();
}

void require_unitary(const ComplexMatrix& u) {
  if (u.rows() != 4 || u.cols() != 4 || unitarity_defect(u) > kUnitaryTol) {
    throw NumericalError("invalid propagator");
  }
}

// ½‖a‖₁ for a 2×2 Hermitian a, in closed form.
double half_trace_norm_2x2(const Eigen::Matrix2cd& a) {
  const double mean = 0.5 * (a(0, 0).real() + a(1, 1).real());
  const double half_gap = 0.5 * (a(0, 0).real() - a(1, 1).real());
  const double radius = std::sqrt(half_gap * half_gap + std::norm(a(0, 1)));
  return 0.5 * (std::abs(mean + radius) + std::abs(mean - radius));
}

}  // namespace

DensityMatrix default_initial_state() { return theta_state(15.0 * std::numbers::pi / 16.0); }

void CollisionConfig::validate() const {
  ancilla.validate();
  coupling.validate();
  if (!std::isfinite(hs.omega)) throw ConfigError("omega_s must be finite");
  if (n_collisions < 1) throw ConfigError("n_collisions must be at least 1");
  if (rho0.dim() != 2) throw ConfigError("rho0 must be a qubit state");
  if (!(convergence_tol > 0.0)) throw ConfigError("convergence_tol must be positive");
}

CollisionOutcome collide_once(const DensityMatrix& rho_s, const DensityMatrix& rho_a,
                              const ComplexMatrix& u) {
  require_unitary(u);
  DensityMatrix joint(HermitianMatrix::hermitize(apply_channel(rho_s.matrix(), rho_a.matrix(), u)));
  DensityMatrix next = partial_trace(joint, {2, 2}, Subsystem::kSystem);
  return {std::move(next), std::move(joint)};
}

Trajectory run(const CollisionConfig& config) {
  config.validate();
  const QubitHamiltonian ha = config.ancilla.hamiltonian();
  const HermitianMatrix hsa = build_interaction(config.coupling);
  const ComplexMatrix u = collision_unitary(config.hs, ha, hsa, config.coupling.dt);
  require_unitary(u);
  const DensityMatrix rho_a = gibbs_state(ha, config.ancilla.beta);
  const HermitianMatrix hs_matrix = config.hs.matrix();
  const HermitianMatrix ha_matrix = ha.matrix();
  const double dt = config.coupling.dt;

  Trajectory traj;
  traj.dt = dt;
  traj.ledger = ThermoLedger(dt);
  traj.states.reserve(static_cast<std::size_t>(config.n_collisions) + 1);
  traj.states.push_back(config.rho0);

  for (long n = 1; n <= config.n_collisions; ++n) {
    const DensityMatrix& rho = traj.states.back();
    CollisionOutcome out = collide_once(rho, rho_a, u);

    CollisionThermo entry;
    entry.w = collision_work(u, hsa, rho, rho_a);
    entry.q = collision_heat(u, ha_matrix, rho, rho_a);
    entry.de_s = trace_product(hs_matrix.matrix(), out.rho_s_next.matrix() - rho.matrix()).real();
    EntropyProduction ep =
        entropy_production_collision(rho, out.joint_after, config.ancilla, config.record_joint);
    entry.ds = ep.delta_s;
    entry.sigma = ep.sigma;
    traj.ledger.record(entry);

    const double change = trace_distance(out.rho_s_next, rho);
    if (config.record_joint) {
      traj.joints.push_back(out.joint_after);
      traj.entropy_checks.push_back(std::move(ep));
    }
    traj.states.push_back(std::move(out.rho_s_next));

    if (!traj.converged_at && change < config.convergence_tol * dt) {
      traj.converged_at = n;
      if (config.stop_at_convergence) break;
    }
  }
  return traj;
}

SteadyStateReport steady_state_by_iteration(const CollisionConfig& config, double tol,
                                            long max_collisions) {
  config.validate();
  if (!(tol > 0.0)) throw Error("steady_state_by_iteration: tol must be positive");
  const QubitHamiltonian ha = config.ancilla.hamiltonian();
  const ComplexMatrix u_dyn =
      collision_unitary(config.hs, ha, build_interaction(config.coupling), config.coupling.dt);
  require_unitary(u_dyn);
  const double dt = config.coupling.dt;

  const Eigen::Matrix4cd u = u_dyn;
  const Eigen::Matrix4cd u_dag = u.adjoint();
  const Eigen::Matrix2cd rho_a = gibbs_state(ha, config.ancilla.beta).matrix();
  Eigen::Matrix2cd rho = config.rho0.matrix();

  double residual = std::numeric_limits<double>::infinity();
  for (long n = 1; n <= max_collisions; ++n) {
    Eigen::Matrix4cd product;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) product.block<2, 2>(2 * i, 2 * j) = rho(i, j) * rho_a;
    const Eigen::Matrix4cd joint = u * product * u_dag;
    Eigen::Matrix2cd next;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) next(i, j) = joint(2 * i, 2 * j) + joint(2 * i + 1, 2 * j + 1);
    next = 0.5 * (next + next.adjoint()).eval();

    residual = half_trace_norm_2x2(next - rho) / dt;
    rho = next;
    if (residual < tol) {
      const DensityMatrix rho_star{ComplexMatrix(rho)};
      return make_report(rho_star, config.hs, residual, false, SteadyStateMethod::kIteration);
    }
  }
  throw NoSteadyStateError(residual, max_collisions);
}

Superoperator collision_map(const CollisionConfig& config) {
  config.validate();
  const QubitHamiltonian ha = config.ancilla.hamiltonian();
  const ComplexMatrix u =
      collision_unitary(config.hs, ha, build_interaction(config.coupling), config.coupling.dt);
  const ComplexMatrix rho_a = gibbs_state(ha, config.ancilla.beta).matrix();
  ComplexMatrix phi(4, 4);
  for (Eigen::Index col = 0; col < 4; ++col) {
    ComplexVector e = ComplexVector::Zero(4);
    e[col] = 1.0;
    const ComplexMatrix basis = unvec(e);
    const ComplexMatrix image =
        partial_trace(apply_channel(basis, rho_a, u), {2, 2}, Subsystem::kSystem);
    phi.col(col) = vec(image);
  }
  return {phi};
}

Superoperator collision_generator(const CollisionConfig& config) {
  Superoperator phi = collision_map(config);
  phi.matrix -= ComplexMatrix::Identity(4, 4);
  phi.matrix /= config.coupling.dt;
  return phi;
}

DensityMatrix evolve_discrete(const CollisionConfig& config) {
  ComplexMatrix base = collision_map(config).matrix;
  ComplexMatrix power = ComplexMatrix::Identity(4, 4);
  for (long n = config.n_collisions; n > 0; n >>= 1) {
    if (n & 1) power = base * power;
    base = base * base;
  }
  return DensityMatrix(HermitianMatrix::hermitize(apply({power}, config.rho0.matrix())));
}

std::vector<double> weak_coupling_sigma_rate(const Trajectory& traj, const QubitHamiltonian& hs,
                                             double beta) {
  return weak_coupling_sigma_rate(traj.states, traj.dt, hs, beta);
}

}  // namespace qcollide
