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

#include "qcollide/lindblad.hpp"

#include <cmath>

#include "qcollide/error.hpp"

namespace qcollide {

namespace {

constexpr std::array<Pauli, 3> kPaulis = {Pauli::kX, Pauli::kY, Pauli::kZ};

Eigen::Index isqrt(Eigen::Index n) {
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(double(n))));
  if (d * d != n) throw Error("superoperator size is not a square");
  return d;
}

}  // namespace

Eigen::Index Superoperator::operator_dim() const { return isqrt(matrix.rows()); }

ComplexVector vec(const ComplexMatrix& m) {
  const Eigen::Index d = m.rows();
  ComplexVector v(d * m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < d; ++i) v[i + j * d] = m(i, j);
  return v;
}

ComplexMatrix unvec(const ComplexVector& v) {
  const Eigen::Index d = isqrt(v.size());
  ComplexMatrix m(d, d);
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index i = 0; i < d; ++i) m(i, j) = v[i + j * d];
  return m;
}

GKSLGenerator build_generator(const CouplingSpec& coupling, const QubitHamiltonian& hs,
                              const AncillaPrep& ancilla) {
  coupling.validate();
  if (coupling.scaling != Scaling::kSqrtDt) {
    throw ConfigError("GKSL generator requires sqrt_dt coupling scaling");
  }
  const DensityMatrix rho_a = gibbs_state(ancilla.hamiltonian(), ancilla.beta);

  GKSLGenerator gen;
  gen.h_sys = hs.matrix();
  std::vector<ComplexMatrix> ancilla_factors;
  for (Pauli l : kPaulis) {
    ComplexMatrix a = ComplexMatrix::Zero(2, 2);
    bool nonzero = false;
    for (Pauli m : kPaulis) {
      const double c = coupling.at(l, m);
      if (c != 0.0) {
        a += c * pauli(m);
        nonzero = true;
      }
    }
    if (!nonzero) continue;
    gen.labels.push_back(l);
    gen.jumps.push_back(pauli(l));
    ancilla_factors.push_back(a);
  }

  const auto n = static_cast<Eigen::Index>(gen.jumps.size());
  gen.rates = ComplexMatrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k)
      gen.rates(j, k) = trace_product(ancilla_factors[k].adjoint() * ancilla_factors[j],
                                      rho_a.matrix());

  if (n > 0) {
    const double lowest = herm_eig(HermitianMatrix(gen.rates)).values.minCoeff();
    if (lowest < -kPsdSlack) throw NumericalError("GKSL rate matrix is not positive semidefinite");
  }
  return gen;
}

ComplexMatrix apply_generator(const GKSLGenerator& gen, const ComplexMatrix& rho) {
  const ComplexMatrix& h = gen.h_sys.matrix();
  const Complex minus_i(0.0, -1.0);
  ComplexMatrix out = minus_i * (h * rho - rho * h);
  const auto n = static_cast<Eigen::Index>(gen.jumps.size());
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      const Complex g = gen.rates(j, k);
      if (g == 0.0) continue;
      const ComplexMatrix& sj = gen.jumps[j];
      const ComplexMatrix sk_dag = gen.jumps[k].adjoint();
      const ComplexMatrix kd = sk_dag * sj;
      out += g * (sj * rho * sk_dag - 0.5 * (kd * rho + rho * kd));
    }
  }
  return out;
}

HermitianMatrix apply_generator(const GKSLGenerator& gen, const DensityMatrix& rho) {
  return HermitianMatrix::hermitize(apply_generator(gen, rho.matrix()));
}

Superoperator vectorize(const GKSLGenerator& gen) {
  const ComplexMatrix& h = gen.h_sys.matrix();
  const Eigen::Index d = h.rows();
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  const Complex minus_i(0.0, -1.0);
  ComplexMatrix l = minus_i * (kron(id, h) - kron(h.transpose(), id));
  const auto n = static_cast<Eigen::Index>(gen.jumps.size());
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      const Complex g = gen.rates(j, k);
      if (g == 0.0) continue;
      const ComplexMatrix& sj = gen.jumps[j];
      const ComplexMatrix& sk = gen.jumps[k];
      const ComplexMatrix kd = sk.adjoint() * sj;
      l += g * (kron(sk.conjugate(), sj) - 0.5 * kron(id, kd) - 0.5 * kron(kd.transpose(), id));
    }
  }
  return {l};
}

ComplexMatrix apply(const Superoperator& op, const ComplexMatrix& rho) {
  return unvec(op.matrix * vec(rho));
}

SteadyStateReport steady_state_kernel(const Superoperator& op, const QubitHamiltonian& hs) {
  const Eigen::Index d = op.operator_dim();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(op.matrix, Eigen::ComputeFullV);
  const RealVector& s = svd.singularValues();  // descending
  const Eigen::Index n = s.size();
  const bool degenerate = n >= 2 && s[n - 1] < kDegeneracyThreshold && s[n - 2] < kDegeneracyThreshold;

  ComplexVector candidate;
  if (!degenerate) {
    candidate = svd.matrixV().col(n - 1);
  } else {
    Eigen::Index k0 = n - 1;
    while (k0 > 0 && s[k0 - 1] < kDegeneracyThreshold) --k0;
    const Eigen::MatrixXcd basis = svd.matrixV().rightCols(n - k0);
    const ComplexVector mixed = vec(ComplexMatrix(ComplexMatrix::Identity(d, d) / double(d)));
    candidate = basis * (basis.adjoint() * mixed);
  }

  const ComplexMatrix raw = unvec(candidate);
  const ComplexMatrix herm = 0.5 * (raw + raw.adjoint());
  const Complex tr = herm.trace();
  if (std::abs(tr) < 1e-12) throw NumericalError("kernel vector cannot be trace-normalized");
  const DensityMatrix rho_star(HermitianMatrix::hermitize(herm / tr));

  const double residual = max_abs(apply(op, rho_star.matrix()));
  return make_report(rho_star, hs, residual, degenerate, SteadyStateMethod::kKernel);
}

DensityMatrix evolve_continuous(const Superoperator& op, const DensityMatrix& rho0, double t) {
  if (t < 0.0) throw Error("evolve_continuous: negative time");
  const ComplexMatrix propagator = expm(ComplexMatrix(t * op.matrix));
  const ComplexMatrix out = unvec(propagator * vec(rho0.matrix()));
  return DensityMatrix(HermitianMatrix::hermitize(out));
}

DensityMatrix evolve_continuous(const GKSLGenerator& gen, const DensityMatrix& rho0, double t) {
  return evolve_continuous(vectorize(gen), rho0, t);
}

}  // namespace qcollide
