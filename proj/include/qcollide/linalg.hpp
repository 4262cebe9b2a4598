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

// Dense complex linear algebra for small operators (qubits and qubit pairs).
//
// All matrices are stored row-major. The two-body ordering convention is
// system factor first, ancilla second: kron(a, b) places b in the fast index.

#pragma once

#include <complex>
#include <utility>

#include <Eigen/Dense>

namespace qcollide {

using Complex = std::complex<double>;
using ComplexMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPsdSlack = 1e-10;
inline constexpr double kUnitaryTol = 1e-10;

/// Largest entry modulus, ‖m‖_max.
double max_abs(const ComplexMatrix& m);

/// Entry-wise comparison with an explicit absolute tolerance.
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double atol);

/// ‖U†U − I‖_max.
double unitarity_defect(const ComplexMatrix& u);

/// A square matrix equal to its adjoint within kHermitianTol.
///
/// The stored value is the exact Hermitian part (M + M†)/2 of the input.
class HermitianMatrix {
 public:
  /// Throws Error when the input is not square or not Hermitian.
  explicit HermitianMatrix(const ComplexMatrix& m);

  /// Takes the Hermitian part without checking. For values produced by
  /// arithmetic that is Hermitian in exact arithmetic.
  static HermitianMatrix hermitize(const ComplexMatrix& m);

  Eigen::Index dim() const { return m_.rows(); }
  const ComplexMatrix& matrix() const { return m_; }
  Complex operator()(Eigen::Index r, Eigen::Index c) const { return m_(r, c); }

 private:
  struct Unchecked {};
  HermitianMatrix(ComplexMatrix m, Unchecked) : m_(std::move(m)) {}

  ComplexMatrix m_;
};

/// Hermitian, unit-trace, positive semidefinite matrix.
///
/// Eigenvalues in [−kPsdSlack, 0) are clamped to zero and the trace is
/// renormalized; the clamp is reported through the debug log.
class DensityMatrix {
 public:
  explicit DensityMatrix(const ComplexMatrix& m);
  explicit DensityMatrix(const HermitianMatrix& h);

  static DensityMatrix maximally_mixed(Eigen::Index dim);
  /// |ψ⟩⟨ψ| for a (not necessarily normalized) nonzero vector.
  static DensityMatrix pure(const ComplexVector& psi);

  Eigen::Index dim() const { return h_.dim(); }
  const ComplexMatrix& matrix() const { return h_.matrix(); }
  const HermitianMatrix& hermitian() const { return h_; }
  Complex operator()(Eigen::Index r, Eigen::Index c) const { return h_(r, c); }
  double population(Eigen::Index k) const { return h_(k, k).real(); }

 private:
  HermitianMatrix h_;
};

/// Eigendecomposition h = V diag(λ) V† with λ ascending.
struct HermitianEigen {
  RealVector values;
  ComplexMatrix vectors;
};

HermitianEigen herm_eig(const HermitianMatrix& h);

/// Kronecker product, (a⊗b)[i·db + k, j·db + l] = a[i,j]·b[k,l].
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Dimensions of a bipartite space, system first.
struct Factorization {
  Eigen::Index system = 2;
  Eigen::Index ancilla = 2;
};

enum class Subsystem { kSystem, kAncilla };

/// Linear partial trace over the complementary factor.
ComplexMatrix partial_trace(const ComplexMatrix& m, Factorization dims, Subsystem keep);
DensityMatrix partial_trace(const DensityMatrix& rho, Factorization dims, Subsystem keep);

/// e^{−i h t} built from the eigendecomposition of h.
ComplexMatrix exp_minus_i(const HermitianMatrix& h, double t);

/// exp(a) for a general square matrix by scaling and squaring of a
/// degree-18 Taylor polynomial, with a scaled to ‖a‖₁ ≤ 1/2.
ComplexMatrix expm(const ComplexMatrix& a);

/// Eigenvalues of a state candidate; throws Error("not a state") when one lies
/// below −kPsdSlack.
RealVector state_eigenvalues(const HermitianMatrix& h);

/// Σ_k f(λ_k) over the eigenvalues of rho.
template <class F>
double matrix_functional(const HermitianMatrix& rho, F&& f) {
  const RealVector lambda = state_eigenvalues(rho);
  double acc = 0.0;
  for (Eigen::Index k = 0; k < lambda.size(); ++k) acc += f(lambda[k]);
  return acc;
}

template <class F>
double matrix_functional(const DensityMatrix& rho, F&& f) {
  return matrix_functional(rho.hermitian(), std::forward<F>(f));
}

/// ½‖a − b‖₁.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);
double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// Tr[a b] without forming the product.
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qcollide
