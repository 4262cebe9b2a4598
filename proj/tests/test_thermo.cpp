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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qcollide/collision.hpp"
#include "qcollide/lindblad.hpp"
#include "qcollide/thermo.hpp"
#include "support.hpp"

using namespace qcollide;
using qtest::Dense;

namespace {

const QubitHamiltonian kH{1.0};
const double kTanhHalf = std::tanh(0.5);

struct Increments {
  double w, q, de_s;
};

// Work, heat and system energy change computed from the oracle propagator.
Increments oracle_increments(const CouplingSpec& c, double ws, double wa, const Dense& rho_s,
                             const Dense& rho_a) {
  const Dense u = qtest::oracle_unitary(c, ws, wa);
  const Dense joint = qtest::kron2(rho_s, rho_a);
  const Dense after = u * joint * u.adjoint();
  const Dense hsa = Dense(build_interaction(c).matrix());
  const Dense hs = 0.5 * ws * qtest::sz(), ha = 0.5 * wa * qtest::sz();
  const Dense id = Dense::Identity(2, 2);
  const Dense ha_full = qtest::kron2(id, ha), hs_full = qtest::kron2(hs, id);
  return {(hsa * joint).trace().real() - (hsa * after).trace().real(),
          (ha_full * (after - joint)).trace().real(), (hs_full * (after - joint)).trace().real()};
}

CollisionConfig cfg_for(const CouplingSpec& c, double beta, long n) {
  CollisionConfig cfg;
  cfg.coupling = c;
  cfg.ancilla = AncillaPrep{beta, 1.0};
  cfg.n_collisions = n;
  return cfg;
}

}  // namespace

TEST_CASE("work and heat match the oracle and obey the first law") {
  for (int trial = 0; trial < 100; ++trial) {
    const CouplingSpec c = qtest::random_coupling(qtest::uniform(0.01, 0.2), false);
    const double ws = qtest::uniform(0.2, 2), wa = qtest::uniform(0.2, 2);
    const AncillaPrep anc{qtest::uniform(-3, 5), wa};
    const DensityMatrix rho_s = qtest::random_state(2);
    const DensityMatrix rho_a = gibbs_state(anc.hamiltonian(), anc.beta);
    const HermitianMatrix hsa = build_interaction(c);
    const ComplexMatrix u = collision_unitary({ws}, {wa}, hsa, c.dt);

    const double w = collision_work(u, hsa, rho_s, rho_a);
    const double q = collision_heat(u, anc.hamiltonian().matrix(), rho_s, rho_a);
    const Increments ref = oracle_increments(c, ws, wa, rho_s.matrix(), rho_a.matrix());
    CHECK(std::abs(w - ref.w) < 1e-10);
    CHECK(std::abs(q - ref.q) < 1e-10);

    const CollisionOutcome out = collide_once(rho_s, rho_a, u);
    const double de_s = trace_product(QubitHamiltonian{ws}.matrix().matrix(),
                                      out.rho_s_next.matrix() - rho_s.matrix())
                            .real();
    CHECK(std::abs(de_s - (w - q)) <= 1e-12);
    CHECK(std::abs(de_s - ref.de_s) < 1e-10);
  }
}

TEST_CASE("work examples") {
  SUBCASE("energy-preserving coupling at resonance does no work") {
    const CouplingSpec c = diagonal_coupling(1.0, 1.0, 0.05);
    const HermitianMatrix hsa = build_interaction(c);
    const ComplexMatrix u = collision_unitary(kH, kH, hsa, c.dt);
    for (int trial = 0; trial < 20; ++trial) {
      CHECK(std::abs(collision_work(u, hsa, qtest::random_state(2), gibbs_state(kH, qtest::uniform(0, 5)))) <=
            1e-12);
    }
  }
  SUBCASE("identity propagator exchanges nothing") {
    const CouplingSpec c = qtest::random_coupling(0.05, false);
    const ComplexMatrix id = ComplexMatrix::Identity(4, 4);
    const DensityMatrix rho_s = qtest::random_state(2), rho_a = gibbs_state(kH, 1.0);
    CHECK(collision_work(id, build_interaction(c), rho_s, rho_a) == 0.0);
    CHECK(collision_heat(id, kH.matrix(), rho_s, rho_a) == 0.0);
  }
  SUBCASE("J_x only on the maximally mixed state") {
    const CouplingSpec c = diagonal_coupling(1.0, 0.0, 1e-4);
    const HermitianMatrix hsa = build_interaction(c);
    const ComplexMatrix u = collision_unitary(kH, kH, hsa, c.dt);
    const double w = collision_work(u, hsa, DensityMatrix::maximally_mixed(2), gibbs_state(kH, 1.0));
    CHECK(std::abs(w / c.dt - kTanhHalf) <= 1e-3);
  }
}

TEST_CASE("continuum currents") {
  const AncillaPrep anc{1.0, 1.0};
  const DensityMatrix mixed = DensityMatrix::maximally_mixed(2);
  const CouplingSpec x = diagonal_coupling(1.0, 0.0, 0.05);
  CHECK(work_current(x, kH, anc, mixed) == doctest::Approx(kTanhHalf).epsilon(1e-12));
  CHECK(heat_current(x, anc, mixed) == doctest::Approx(kTanhHalf).epsilon(1e-12));

  for (int trial = 0; trial < 100; ++trial) {
    const CouplingSpec c = qtest::random_coupling(0.05, false);
    const AncillaPrep a{qtest::uniform(-2, 5), qtest::uniform(0.2, 2)};
    const QubitHamiltonian hs{qtest::uniform(0.2, 2)};
    const DensityMatrix rho = qtest::random_state(2);
    CHECK(std::abs(work_current(c, hs, a, rho) - work_current_double_commutator(c, hs, a, rho)) <= 1e-12);
  }
}

TEST_CASE("currents are the small-dt limit of single collisions") {
  for (int trial = 0; trial < 20; ++trial) {
    CouplingSpec c = qtest::random_coupling(1e-5);
    const AncillaPrep anc{qtest::uniform(0.2, 4), 1.0};
    const DensityMatrix rho = qtest::random_state(2), rho_a = gibbs_state(kH, anc.beta);
    const HermitianMatrix hsa = build_interaction(c);
    const ComplexMatrix u = collision_unitary(kH, kH, hsa, c.dt);
    CHECK(std::abs(collision_work(u, hsa, rho, rho_a) / c.dt - work_current(c, kH, anc, rho)) < 1e-2);
    CHECK(std::abs(collision_heat(u, kH.matrix(), rho, rho_a) / c.dt - heat_current(c, anc, rho)) < 1e-2);
  }
}

TEST_CASE("at the continuum steady state work and heat currents balance") {
  for (int trial = 0; trial < 30; ++trial) {
    const CouplingSpec c = qtest::random_coupling(0.05);
    const AncillaPrep anc{qtest::uniform(0.2, 5), 1.0};
    const SteadyStateReport r = steady_state_kernel(vectorize(build_generator(c, kH, anc)), kH);
    if (r.degenerate) continue;
    const double w = work_current(c, kH, anc, r.rho_star);
    const double q = heat_current(c, anc, r.rho_star);
    CHECK(std::abs(w - q) <= 1e-8);
    // No entropy change at the steady state, so the production rate is βQ̇.
    CHECK(anc.beta * q >= -1e-10);
  }
}

TEST_CASE("entropy production is nonnegative and its three forms agree") {
  for (int trial = 0; trial < 200; ++trial) {
    const CouplingSpec c = qtest::random_coupling(qtest::uniform(0.01, 0.3), false);
    const AncillaPrep anc{qtest::uniform(-2, 6), qtest::uniform(0.3, 2)};
    const DensityMatrix rho_s = qtest::random_state(2);
    const DensityMatrix rho_a = gibbs_state(anc.hamiltonian(), anc.beta);
    const ComplexMatrix u = collision_unitary(kH, anc.hamiltonian(), build_interaction(c), c.dt);
    const CollisionOutcome out = collide_once(rho_s, rho_a, u);
    const EntropyProduction ep = entropy_production_collision(rho_s, out.joint_after, anc);
    CHECK(ep.sigma >= -1e-12);
    REQUIRE(ep.joint_relative_entropy.has_value());
    REQUIRE(ep.correlation_form.has_value());
    CHECK(std::abs(ep.sigma - *ep.joint_relative_entropy) <= 1e-10);
    CHECK(std::abs(ep.sigma - *ep.correlation_form) <= 1e-10);
    CHECK(std::abs(ep.heat - collision_heat(u, anc.hamiltonian().matrix(), rho_s, rho_a)) <= 1e-12);
  }
}

TEST_CASE("entropy production at infinite beta skips the identity checks") {
  const CouplingSpec c = diagonal_coupling(1.0, 1.0, 0.05);
  const AncillaPrep anc{kInfiniteBeta, 1.0};
  const DensityMatrix rho_s = qtest::random_state(2);
  const ComplexMatrix u = collision_unitary(kH, kH, build_interaction(c), c.dt);
  const CollisionOutcome out = collide_once(rho_s, gibbs_state(kH, kInfiniteBeta), u);
  const EntropyProduction ep = entropy_production_collision(rho_s, out.joint_after, anc);
  CHECK_FALSE(ep.joint_relative_entropy.has_value());
  CHECK_FALSE(ep.correlation_form.has_value());
  CHECK_FALSE(ep.skipped_reason.empty());
}

TEST_CASE("entropy examples") {
  CHECK(von_neumann_entropy(DensityMatrix::maximally_mixed(2)) == doctest::Approx(std::numbers::ln2));
  CHECK(std::abs(von_neumann_entropy(qtest::random_pure_state(2))) < 1e-12);
  CHECK(von_neumann_entropy(DensityMatrix::maximally_mixed(4)) == doctest::Approx(2 * std::numbers::ln2));

  const DensityMatrix rho = qtest::random_state(2);
  CHECK(std::abs(relative_entropy(rho, rho)) < 1e-12);
  CHECK(std::isinf(relative_entropy(gibbs_state(kH, -kInfiniteBeta), gibbs_state(kH, kInfiniteBeta))));
  CHECK(relative_entropy(gibbs_state(kH, kInfiniteBeta), DensityMatrix::maximally_mixed(2)) ==
        doctest::Approx(std::numbers::ln2));
  for (int trial = 0; trial < 50; ++trial) {
    CHECK(relative_entropy(qtest::random_state(2), qtest::random_state(2)) >= -1e-12);
  }

  const Factorization dims{2, 2};
  const DensityMatrix product(HermitianMatrix::hermitize(kron(qtest::random_state(2).matrix(), rho.matrix())));
  CHECK(std::abs(mutual_information(product, dims)) < 1e-12);
  ComplexVector bell = ComplexVector::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  CHECK(mutual_information(DensityMatrix::pure(bell), dims) == doctest::Approx(2 * std::numbers::ln2));
}

TEST_CASE("ledger keeps running sums and rates") {
  ThermoLedger ledger(0.5);
  ledger.record({1.0, 0.25, 0.75, 0.0, 0.1});
  ledger.record({2.0, 0.5, 1.5, 0.0, 0.2});
  CHECK(ledger.size() == 2);
  CHECK(ledger.total_work(1) == 3.0);
  CHECK(ledger.total_heat(1) == 0.75);
  CHECK(ledger.total_sigma(1) == doctest::Approx(0.3));
  CHECK(ledger.work_rate(1) == 4.0);
  CHECK(ledger.heat_rate(0) == 0.5);
}

TEST_CASE("weak-coupling entropy rate") {
  SUBCASE("vanishes along a thermal trajectory") {
    CollisionConfig cfg = cfg_for(diagonal_coupling(1.0, 1.0, 0.05), 1.0, 50);
    cfg.rho0 = gibbs_state(kH, 1.0);
    for (double r : weak_coupling_sigma_rate(run(cfg), kH, 1.0)) CHECK(std::abs(r) <= 1e-10);
  }
  SUBCASE("is nonnegative on the energy-preserving transient") {
    const Trajectory traj = run(cfg_for(diagonal_coupling(1.0, 1.0, 0.05), 1.0, 400));
    const std::vector<double> rates = weak_coupling_sigma_rate(traj, kH, 1.0);
    CHECK(rates.size() == traj.states.size());
    for (double r : rates) CHECK(r >= -1e-10);
  }
  SUBCASE("misses the dissipation of a non-energy-preserving steady state") {
    const Trajectory traj = run(cfg_for(diagonal_coupling(1.0, 0.0, 0.05), 1.0, 1000));
    const std::vector<double> rates = weak_coupling_sigma_rate(traj, kH, 1.0);
    const double collision_rate = traj.ledger.sigma_rate(traj.ledger.size() - 1);
    CHECK(collision_rate > 0.4);
    CHECK(std::abs(rates.back()) < 1e-6);
  }
}
