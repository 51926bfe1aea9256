// Copyright 2026 The Clonesim Authors
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

#ifndef CLONESIM_QMATH_HPP
#define CLONESIM_QMATH_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace clonesim {

using cplx = std::complex<double>;

/// Dense complex matrix with row-major storage. Construction and factory
/// functions reject non-finite entries.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  const std::vector<cplx>& entries() const { return entries_; }

  ComplexMatrix dagger() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  cplx trace() const;
  double frobenius_norm() const;
  bool is_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cplx scalar);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> entries_;
};

/// Normalized state vector. The constructor rescales to unit norm and rejects
/// vectors with vanishing or non-finite norm.
class Ket {
 public:
  explicit Ket(std::vector<cplx> amplitudes);

  static Ket basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return amplitudes_.size(); }
  const cplx& operator[](std::size_t i) const { return amplitudes_[i]; }
  const std::vector<cplx>& amplitudes() const { return amplitudes_; }

  /// |psi><psi|
  ComplexMatrix projector() const;

 private:
  std::vector<cplx> amplitudes_;
};

/// Kronecker product with a-major block ordering:
/// entry((i1,i2),(j1,j2)) = a(i1,j1) * b(i2,j2).
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
Ket tensor(const Ket& a, const Ket& b);

/// Trace out the factors not listed in `keep`. `factor_dims` lists the tensor
/// factor dimensions in order (their product must equal the matrix dimension);
/// the kept factors appear in the result in their original relative order.
ComplexMatrix partial_trace(const ComplexMatrix& rho, const std::vector<std::size_t>& factor_dims,
                            const std::vector<std::size_t>& keep);

struct Eigensystem {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // orthonormal eigenvectors as columns
};

/// Full eigensystem of a Hermitian matrix via cyclic Jacobi rotations.
/// Throws if the input is not Hermitian within 1e-10 or the iteration fails
/// to converge within 100 sweeps.
Eigensystem hermitian_eigensystem(const ComplexMatrix& m);

/// Positive-semidefinite square root. Eigenvalues in [-1e-10, 0) are clamped
/// to zero; anything more negative is an error.
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m);

/// Projector onto the symmetric subspace of n qubits (1 <= n <= 12), i.e. the
/// uniform average of all n! qubit-permutation operators. Entries are
/// 1/binomial(n,k) between basis states of equal Hamming weight k, which is
/// that average in closed form; rank is n+1.
ComplexMatrix symmetric_projector(int n);

/// <psi| rho |psi>, clamped to [0, 1].
double state_fidelity(const Ket& psi, const ComplexMatrix& rho);

/// Tr(rho^2). Throws if rho is not a density matrix.
double purity(const ComplexMatrix& rho);

/// Square, Hermitian, unit trace and positive semidefinite within `tol`.
bool is_density_matrix(const ComplexMatrix& rho, double tol = 1e-8);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const ComplexMatrix& m);

/// max_ij |a_ij - b_ij|; infinity when shapes differ.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

double binomial(int n, int k);

}  // namespace clonesim

#endif  // CLONESIM_QMATH_HPP
