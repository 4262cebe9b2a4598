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

// Shared test helpers: seeded random operators and closed-form oracles that
// do not go through the library code paths they check.

#pragma once

#include <cmath>
#include <complex>
#include <random>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "qcollide/linalg.hpp"
#include "qcollide/model.hpp"

namespace qtest {

using qcollide::Complex;
using qcollide::ComplexMatrix;
using Dense = Eigen::MatrixXcd;  // column-major, independent of the library's storage

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20260214);
  return gen;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline Dense random_complex(int d, double scale = 1.0) {
  Dense m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = Complex(uniform(-scale, scale), uniform(-scale, scale));
  return m;
}

inline Dense random_hermitian(int d, double scale = 1.0) {
  const Dense a = random_complex(d, scale);
  return 0.5 * (a + a.adjoint());
}

/// Full-rank state from a Ginibre matrix, G G† / Tr.
inline qcollide::DensityMatrix random_state(int d) {
  const Dense g = random_complex(d);
  const Dense rho = g * g.adjoint();
  return qcollide::DensityMatrix(ComplexMatrix(rho / rho.trace()));
}

inline qcollide::DensityMatrix random_pure_state(int d) {
  Eigen::VectorXcd psi(d);
  for (int i = 0; i < d; ++i) psi[i] = Complex(uniform(-1, 1), uniform(-1, 1));
  psi.normalize();
  return qcollide::DensityMatrix::pure(psi);
}

inline Dense random_unitary(int d) {
  Eigen::HouseholderQR<Dense> qr(random_complex(d));
  return qr.householderQ();
}

/// J_lm uniform in [−1, 1]; the ancilla σ_z column is left at zero when
/// `no_ancilla_z` is set.
inline qcollide::CouplingSpec random_coupling(double dt, bool no_ancilla_z = true) {
  qcollide::CouplingSpec c;
  c.dt = dt;
  for (int l = 0; l < 3; ++l)
    for (int m = 0; m < 3; ++m) c.j[l][m] = (no_ancilla_z && m == 2) ? 0.0 : uniform(-1.0, 1.0);
  return c;
}

// Closed-form oracles.

/// Excited population of a thermal qubit with H = (ω/2)σ_z: ½(1 − tanh(βω/2)).
inline double gibbs_excited(double beta, double omega) {
  return 0.5 * (1.0 - std::tanh(0.5 * beta * omega));
}

/// Steady β_eff·ω_S of the diagonal coupling (J_x σ_xσ_x + J_y σ_yσ_y) from
/// detailed balance of the σ∓ rates: ln((a p_g + b p_e)/(a p_e + b p_g)).
inline double detailed_balance_beta_omega(double jx, double jy, double beta, double omega_a) {
  const double a = (jx + jy) * (jx + jy);
  const double b = (jx - jy) * (jx - jy);
  const double pe = gibbs_excited(beta, omega_a);
  const double pg = 1.0 - pe;
  return std::log((a * pg + b * pe) / (a * pe + b * pg));
}

inline const Dense& sx() {
  static const Dense m = (Dense(2, 2) << 0, 1, 1, 0).finished();
  return m;
}
inline const Dense& sy() {
  static const Dense m = (Dense(2, 2) << 0, Complex(0, -1), Complex(0, 1), 0).finished();
  return m;
}
inline const Dense& sz() {
  static const Dense m = (Dense(2, 2) << 1, 0, 0, -1).finished();
  return m;
}
/// |g⟩⟨e| in the (|e⟩, |g⟩) basis.
inline const Dense& sminus() {
  static const Dense m = (Dense(2, 2) << 0, 0, 1, 0).finished();
  return m;
}

inline Dense kron2(const Dense& a, const Dense& b) { return Eigen::kroneckerProduct(a, b).eval(); }

/// Tr_A by explicit index sums on a (2·2)×(2·2) operator.
inline Dense trace_out_ancilla(const Dense& m) {
  Dense out = Dense::Zero(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) out(i, j) += m(2 * i + k, 2 * j + k);
  return out;
}

/// exp(−i t H) through Eigen's general matrix exponential.
inline Dense oracle_propagator(const Dense& h, double t) {
  const Dense a = Complex(0.0, -t) * h;
  return a.exp();
}

/// U for ω_S = ω_A = ω and a raw coupling matrix, assembled independently.
inline Dense oracle_unitary(const qcollide::CouplingSpec& c, double omega_s, double omega_a) {
  const Dense* p[3] = {&sx(), &sy(), &sz()};
  Dense hsa = Dense::Zero(4, 4);
  for (int l = 0; l < 3; ++l)
    for (int m = 0; m < 3; ++m) hsa += c.j[l][m] * kron2(*p[l], *p[m]);
  if (c.scaling == qcollide::Scaling::kSqrtDt) hsa /= std::sqrt(c.dt);
  const Dense id = Dense::Identity(2, 2);
  const Dense h = 0.5 * omega_s * kron2(sz(), id) + 0.5 * omega_a * kron2(id, sz()) + hsa;
  return oracle_propagator(h, c.dt);
}

inline double max_abs(const Dense& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace qtest
