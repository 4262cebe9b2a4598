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

#include "qcollide/model.hpp"

#include <cmath>

#include "qcollide/error.hpp"

namespace qcollide {

namespace {

ComplexMatrix make_pauli(Pauli p) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  switch (p) {
    case Pauli::kX:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case Pauli::kY:
      m(0, 1) = Complex(0.0, -1.0);
      m(1, 0) = Complex(0.0, 1.0);
      break;
    case Pauli::kZ:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
  }
  return m;
}

constexpr std::array<Pauli, 3> kPaulis = {Pauli::kX, Pauli::kY, Pauli::kZ};

}  // namespace

const ComplexMatrix& pauli(Pauli p) {
  static const std::array<ComplexMatrix, 3> table = {
      make_pauli(Pauli::kX), make_pauli(Pauli::kY), make_pauli(Pauli::kZ)};
  return table[int(p)];
}

ComplexMatrix identity2() { return ComplexMatrix::Identity(2, 2); }

HermitianMatrix QubitHamiltonian::matrix() const {
  return HermitianMatrix(ComplexMatrix(0.5 * omega * pauli(Pauli::kZ)));
}

void AncillaPrep::validate() const {
  if (std::isnan(beta)) throw ConfigError("ancilla beta must not be NaN");
  if (!std::isfinite(omega_a)) throw ConfigError("ancilla omega_a must be finite");
}

double CouplingSpec::scale() const {
  return scaling == Scaling::kSqrtDt ? 1.0 / std::sqrt(dt) : 1.0;
}

bool CouplingSpec::is_zero() const {
  for (const auto& row : j)
    for (double v : row)
      if (v != 0.0) return false;
  return true;
}

void CouplingSpec::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("coupling dt must be positive");
  for (const auto& row : j)
    for (double v : row)
      if (!std::isfinite(v)) throw ConfigError("coupling coefficients must be finite");
}

CouplingSpec diagonal_coupling(double jx, double jy, double dt, Scaling scaling) {
  CouplingSpec spec;
  spec.at(Pauli::kX, Pauli::kX) = jx;
  spec.at(Pauli::kY, Pauli::kY) = jy;
  spec.dt = dt;
  spec.scaling = scaling;
  return spec;
}

CouplingSpec ssc_coupling(double jx, double jy, double jzy, double dt, Scaling scaling) {
  CouplingSpec spec = diagonal_coupling(jx, jy, dt, scaling);
  spec.at(Pauli::kZ, Pauli::kY) = jzy;
  return spec;
}

CouplingSpec ssc_to_coupling(const SscAngles& angles, double dt, Scaling scaling) {
  const double m = angles.magnitude;
  return ssc_coupling(m * std::cos(angles.alpha) * std::cos(angles.gamma),
                      m * std::cos(angles.alpha) * std::sin(angles.gamma),
                      m * std::sin(angles.alpha), dt, scaling);
}

SscAngles coupling_to_ssc(const CouplingSpec& spec) {
  const double jx = spec.at(Pauli::kX, Pauli::kX);
  const double jy = spec.at(Pauli::kY, Pauli::kY);
  const double jzy = spec.at(Pauli::kZ, Pauli::kY);
  const double perp = std::hypot(jx, jy);
  SscAngles angles;
  angles.alpha = std::atan2(jzy, perp);
  angles.gamma = std::atan2(jy, jx);
  angles.magnitude = std::hypot(perp, jzy);
  return angles;
}

DensityMatrix gibbs_state(const HermitianMatrix& h, double beta) {
  if (std::isnan(beta)) throw Error("gibbs_state: beta is NaN");
  const HermitianEigen eig = herm_eig(h);
  const RealVector& lambda = eig.values;
  const Eigen::Index n = lambda.size();
  RealVector weights = RealVector::Zero(n);

  if (std::isinf(beta)) {
    const double target = beta > 0 ? lambda.minCoeff() : lambda.maxCoeff();
    const double tol = 1e-12 * std::max(1.0, std::abs(target));
    int count = 0;
    for (Eigen::Index k = 0; k < n; ++k) {
      if (std::abs(lambda[k] - target) <= tol) {
        weights[k] = 1.0;
        ++count;
      }
    }
    if (count != 1) throw Error("ill-defined zero-temperature limit");
  } else {
    const double ref = beta >= 0 ? lambda.minCoeff() : lambda.maxCoeff();
    for (Eigen::Index k = 0; k < n; ++k) weights[k] = std::exp(-beta * (lambda[k] - ref));
    weights /= weights.sum();
  }
  const ComplexMatrix rho =
      eig.vectors * weights.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
  return DensityMatrix(HermitianMatrix::hermitize(rho));
}

DensityMatrix gibbs_state(const QubitHamiltonian& h, double beta) {
  return gibbs_state(h.matrix(), beta);
}

HermitianMatrix interaction_operator(const CouplingSpec& spec) {
  ComplexMatrix v = ComplexMatrix::Zero(4, 4);
  for (Pauli l : kPaulis) {
    for (Pauli m : kPaulis) {
      const double c = spec.at(l, m);
      if (c != 0.0) v += c * kron(pauli(l), pauli(m));
    }
  }
  return HermitianMatrix(v);
}

HermitianMatrix build_interaction(const CouplingSpec& spec) {
  return HermitianMatrix(ComplexMatrix(spec.scale() * interaction_operator(spec).matrix()));
}

bool first_moment_vanishes(const CouplingSpec& spec, const DensityMatrix& rho_a,
                           double atol) {
  const ComplexMatrix lifted = kron(identity2(), rho_a.matrix());
  const ComplexMatrix reduced =
      partial_trace(ComplexMatrix(build_interaction(spec).matrix() * lifted), {}, Subsystem::kSystem);
  return max_abs(reduced) <= atol;
}

HermitianMatrix total_hamiltonian(const QubitHamiltonian& hs, const QubitHamiltonian& ha,
                                  const HermitianMatrix& hsa) {
  if (hsa.dim() != 4) throw Error("interaction must act on a qubit pair");
  const ComplexMatrix h = kron(hs.matrix().matrix(), identity2()) +
                          kron(identity2(), ha.matrix().matrix()) + hsa.matrix();
  return HermitianMatrix(h);
}

ComplexMatrix collision_unitary(const QubitHamiltonian& hs, const QubitHamiltonian& ha,
                                const HermitianMatrix& hsa, double dt) {
  return exp_minus_i(total_hamiltonian(hs, ha, hsa), dt);
}

DensityMatrix bloch_state(double x, double y, double z) {
  const double r = std::sqrt(x * x + y * y + z * z);
  if (!std::isfinite(r) || r > 1.0 + 1e-12) {
    throw ConfigError("Bloch vector norm exceeds 1");
  }
  const ComplexMatrix rho = 0.5 * (identity2() + x * pauli(Pauli::kX) +
                                   y * pauli(Pauli::kY) + z * pauli(Pauli::kZ));
  return DensityMatrix(rho);
}

DensityMatrix theta_state(double theta) {
  ComplexVector psi(2);
  psi << std::cos(theta), std::sin(theta);
  return DensityMatrix::pure(psi);
}

}  // namespace qcollide
