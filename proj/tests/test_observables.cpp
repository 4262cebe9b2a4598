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
#include "qcollide/error.hpp"
#include "qcollide/lindblad.hpp"
#include "qcollide/observables.hpp"
#include "support.hpp"

using namespace qcollide;
using qtest::Dense;

namespace {

const QubitHamiltonian kH{1.0};

DensityMatrix plus_state() { return bloch_state(1, 0, 0); }

DensityMatrix diagonal_state(double p_e) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = p_e;
  m(1, 1) = 1.0 - p_e;
  return DensityMatrix(HermitianMatrix(m));
}

DensityMatrix kernel_steady(const CouplingSpec& c, double beta) {
  return steady_state_kernel(vectorize(build_generator(c, kH, AncillaPrep{beta, 1.0})), kH).rho_star;
}

}  // namespace

TEST_CASE("effective_beta examples") {
  CHECK(effective_beta(DensityMatrix::maximally_mixed(2), 1.0) == 0.0);
  CHECK(effective_beta(gibbs_state(kH, 2.0), 1.0) == doctest::Approx(2.0).epsilon(1e-12));

  const double expected = qtest::detailed_balance_beta_omega(1.0, 0.5, 1.0, 1.0);
  CHECK(expected == doctest::Approx(0.776).epsilon(1e-3));
  CHECK(effective_beta(kernel_steady(diagonal_coupling(1.0, 0.5, 0.05), 1.0), 1.0) ==
        doctest::Approx(expected).epsilon(1e-10));

  CHECK(effective_beta(gibbs_state(kH, kInfiniteBeta), 1.0) == kInfiniteBeta);
  CHECK(effective_beta(gibbs_state(kH, -kInfiniteBeta), 1.0) == -kInfiniteBeta);
  CHECK_THROWS_AS(effective_beta(DensityMatrix::maximally_mixed(2), 0.0), Error);
}

TEST_CASE("effective_beta inverts gibbs_state") {
  for (int k = -50; k <= 50; ++k) {
    const double beta = 0.1 * k;
    for (double omega : {0.5, 1.0, 2.0}) {
      CHECK(std::abs(effective_beta(gibbs_state(QubitHamiltonian{omega}, beta), omega) - beta) <= 1e-10);
    }
  }
}

TEST_CASE("diagonal couplings never cool below the bath") {
  for (double beta : {1.0, 3.0, 5.0, 7.0, 9.0}) {
    for (int k = 0; k <= 40; ++k) {
      const double ratio = -3.0 + 0.15 * k;
      const double beta_eff = effective_beta(kernel_steady(diagonal_coupling(1.0, ratio, 0.05), beta), 1.0);
      CHECK(std::abs(beta_eff / beta) <= 1.0 + 1e-6);
      CHECK(beta_eff == doctest::Approx(qtest::detailed_balance_beta_omega(1.0, ratio, beta, 1.0)).epsilon(1e-8));
    }
  }
}

TEST_CASE("l1_coherence examples") {
  CHECK(l1_coherence(diagonal_state(0.3)) == 0.0);
  CHECK(l1_coherence(plus_state()) == doctest::Approx(1.0));
  for (int trial = 0; trial < 50; ++trial) {
    const DensityMatrix rho = qtest::random_state(2);
    CHECK(l1_coherence(rho) == doctest::Approx(2 * std::abs(rho(0, 1))));
    CHECK(l1_coherence(rho) > 1e-14);
  }

  const double s = std::sqrt(1.25);
  CHECK(l1_coherence(kernel_steady(ssc_coupling(1.0, 0.5, s, 0.05), 1.0)) > 1e-3);
  CHECK(l1_coherence(kernel_steady(ssc_coupling(1.0, 0.5, 0.0, 0.05), 1.0)) <= 1e-14);
}

TEST_CASE("ergotropy examples") {
  const HermitianMatrix h = kH.matrix();
  for (double beta : {0.1, 1.0, 5.0}) CHECK(ergotropy(gibbs_state(kH, beta), h) <= 1e-12);
  CHECK(ergotropy(gibbs_state(kH, -kInfiniteBeta), h) == 1.0);
  CHECK(ergotropy(plus_state(), h) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(ergotropy(DensityMatrix::maximally_mixed(2), h) == 0.0);

  // Pure states: everything above the ground energy is extractable.
  for (int trial = 0; trial < 50; ++trial) {
    const DensityMatrix psi = qtest::random_pure_state(2);
    CHECK(ergotropy(psi, h) == doctest::Approx(trace_product(h.matrix(), psi.matrix()).real() + 0.5));
  }
}

TEST_CASE("ergotropy is invariant under rotations commuting with H") {
  const HermitianMatrix h = kH.matrix();
  for (int trial = 0; trial < 50; ++trial) {
    const DensityMatrix rho = qtest::random_state(2);
    ComplexMatrix u = ComplexMatrix::Zero(2, 2);
    u(0, 0) = std::polar(1.0, qtest::uniform(-3, 3));
    u(1, 1) = std::polar(1.0, qtest::uniform(-3, 3));
    const DensityMatrix rotated(HermitianMatrix::hermitize(u * rho.matrix() * u.adjoint()));
    CHECK(std::abs(ergotropy(rotated, h) - ergotropy(rho, h)) <= 1e-13);
  }
}

TEST_CASE("passivity: zero ergotropy exactly for non-inverted diagonal states") {
  const HermitianMatrix h = kH.matrix();
  for (int k = 0; k <= 100; ++k) {
    const double p_e = 0.01 * k;
    const double e = ergotropy(diagonal_state(p_e), h);
    if (p_e <= 0.5) {
      CHECK(e <= 1e-15);
      CHECK(is_passive(diagonal_state(p_e), h));
    } else {
      CHECK(e == doctest::Approx(2 * p_e - 1));
      CHECK_FALSE(is_passive(diagonal_state(p_e), h));
    }
  }
  for (int trial = 0; trial < 50; ++trial) CHECK(ergotropy(qtest::random_state(2), h) > 0.0);
}

TEST_CASE("is_passive examples") {
  const HermitianMatrix h = kH.matrix();
  CHECK(is_passive(gibbs_state(kH, 1.0), h));
  CHECK(is_passive(DensityMatrix::maximally_mixed(2), h));
  CHECK_FALSE(is_passive(kernel_steady(diagonal_coupling(1.0, -0.5, 0.05), 1.0), h));
}

TEST_CASE("make_report suppresses beta_eff for coherent states") {
  const SteadyStateReport thermal = make_report(gibbs_state(kH, 2.0), kH, 0.0, false, SteadyStateMethod::kKernel);
  REQUIRE(thermal.beta_eff.has_value());
  CHECK(*thermal.beta_eff == doctest::Approx(2.0));
  CHECK(thermal.ergotropy == 0.0);

  const SteadyStateReport coherent = make_report(plus_state(), kH, 0.0, false, SteadyStateMethod::kIteration);
  CHECK_FALSE(coherent.beta_eff.has_value());
  CHECK(coherent.coherence_l1 == doctest::Approx(1.0));
  CHECK(coherent.ergotropy == doctest::Approx(0.5));
  CHECK(std::string(to_string(coherent.method)) == "iteration");
}
