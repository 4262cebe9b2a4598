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

#include "qcollide/linalg.hpp"

#include <algorithm>
#include <cmath>

#include <spdlog/spdlog.h>

#include "qcollide/error.hpp"

namespace qcollide {

namespace {

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(std::string(what) + ": matrix must be square and non-empty");
  }
}

}  // namespace

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double atol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs(a - b) <= atol;
}

double unitarity_defect(const ComplexMatrix& u) {
  const ComplexMatrix id = ComplexMatrix::Identity(u.rows(), u.cols());
  return max_abs(u.adjoint() * u - id);
}

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m) {
  require_square(m, "HermitianMatrix");
  const ComplexMatrix adj = m.adjoint();
  if (max_abs(m - adj) > kHermitianTol) {
    throw Error("HermitianMatrix: input is not Hermitian");
  }
  m_ = 0.5 * (m + adj);
}

HermitianMatrix HermitianMatrix::hermitize(const ComplexMatrix& m) {
  require_square(m, "HermitianMatrix::hermitize");
  const ComplexMatrix adj = m.adjoint();
  return HermitianMatrix(0.5 * (m + adj), Unchecked{});
}

namespace {

HermitianMatrix validated_state(const HermitianMatrix& h) {
  const Complex tr = h.matrix().trace();
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw Error("not a state: trace " + std::to_string(tr.real()) + " differs from 1");
  }
  const HermitianEigen eig = herm_eig(h);
  const double lowest = eig.values.minCoeff();
  if (lowest < -kPsdSlack) {
    throw Error("not a state: eigenvalue " + std::to_string(lowest) + " below zero");
  }
  if (lowest >= 0.0) return h;

  RealVector clamped = eig.values.cwiseMax(0.0);
  clamped /= clamped.sum();
  spdlog::debug("density matrix: clamped eigenvalue {:.3e} to zero", lowest);
  const ComplexMatrix rebuilt =
      eig.vectors * clamped.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
  return HermitianMatrix::hermitize(rebuilt);
}

}  // namespace

DensityMatrix::DensityMatrix(const ComplexMatrix& m)
    : h_(validated_state(HermitianMatrix(m))) {}

DensityMatrix::DensityMatrix(const HermitianMatrix& h) : h_(validated_state(h)) {}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index dim) {
  return DensityMatrix(ComplexMatrix(ComplexMatrix::Identity(dim, dim) / double(dim)));
}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi) {
  const double norm = psi.norm();
  if (norm == 0.0) throw Error("pure state: zero vector");
  const ComplexVector unit = psi / norm;
  return DensityMatrix(HermitianMatrix::hermitize(unit * unit.adjoint()));
}

HermitianEigen herm_eig(const HermitianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.matrix());
  if (solver.info() != Eigen::Success) {
    throw NumericalError("herm_eig: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, Factorization dims, Subsystem keep) {
  const Eigen::Index ds = dims.system;
  const Eigen::Index da = dims.ancilla;
  if (ds <= 0 || da <= 0 || m.rows() != ds * da || m.cols() != ds * da) {
    throw Error("incompatible factorization");
  }
  if (keep == Subsystem::kSystem) {
    ComplexMatrix out = ComplexMatrix::Zero(ds, ds);
    for (Eigen::Index i = 0; i < ds; ++i)
      for (Eigen::Index j = 0; j < ds; ++j)
        for (Eigen::Index k = 0; k < da; ++k) out(i, j) += m(i * da + k, j * da + k);
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(da, da);
  for (Eigen::Index k = 0; k < da; ++k)
    for (Eigen::Index l = 0; l < da; ++l)
      for (Eigen::Index i = 0; i < ds; ++i) out(k, l) += m(i * da + k, i * da + l);
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, Factorization dims, Subsystem keep) {
  return DensityMatrix(HermitianMatrix::hermitize(partial_trace(rho.matrix(), dims, keep)));
}

ComplexMatrix exp_minus_i(const HermitianMatrix& h, double t) {
  const HermitianEigen eig = herm_eig(h);
  ComplexVector phases(eig.values.size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) {
    phases[k] = std::exp(Complex(0.0, -eig.values[k] * t));
  }
  return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

ComplexMatrix expm(const ComplexMatrix& a) {
  require_square(a, "expm");
  constexpr int kTaylorDegree = 18;
  const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm1 > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
  const ComplexMatrix scaled = a / std::ldexp(1.0, squarings);

  // Horner evaluation of Σ_{k≤18} scaled^k / k!.
  const ComplexMatrix id = ComplexMatrix::Identity(a.rows(), a.cols());
  ComplexMatrix result = id;
  for (int k = kTaylorDegree; k >= 1; --k) {
    result = id + (scaled * result) / double(k);
  }
  for (int s = 0; s < squarings; ++s) result = (result * result).eval();
  return result;
}

RealVector state_eigenvalues(const HermitianMatrix& h) {
  RealVector lambda = herm_eig(h).values;
  if (lambda.minCoeff() < -kPsdSlack) throw Error("not a state");
  return lambda;
}

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  const HermitianEigen eig = herm_eig(HermitianMatrix::hermitize(a - b));
  return 0.5 * eig.values.cwiseAbs().sum();
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  return trace_distance(a.matrix(), b.matrix());
}

Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a.cwiseProduct(b.transpose()).sum();
}

}  // namespace qcollide
