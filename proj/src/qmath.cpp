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

#include "clonesim/qmath.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace clonesim {

namespace {

bool finite(const cplx& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, cplx{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  require(entries_.size() == rows_ * cols_, "ComplexMatrix: entry count must be rows*cols");
  require(is_finite(), "ComplexMatrix: non-finite entry");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::dagger() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = std::conj(entries_[i]);
  return out;
}

cplx ComplexMatrix::trace() const {
  require(rows_ == cols_, "trace: matrix must be square");
  cplx t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const cplx& z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

bool ComplexMatrix::is_finite() const {
  return std::all_of(entries_.begin(), entries_.end(), finite);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require(rows_ == other.rows_ && cols_ == other.cols_, "operator+=: shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require(rows_ == other.rows_ && cols_ == other.cols_, "operator-=: shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scalar) {
  for (cplx& z : entries_) z *= scalar;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.cols_ == b.rows_, "operator*: inner dimensions mismatch");
  ComplexMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

Ket::Ket(std::vector<cplx> amplitudes) : amplitudes_(std::move(amplitudes)) {
  require(!amplitudes_.empty(), "Ket: empty amplitude vector");
  double n2 = 0.0;
  for (const cplx& a : amplitudes_) {
    require(finite(a), "Ket: non-finite amplitude");
    n2 += std::norm(a);
  }
  require(n2 > 1e-24, "Ket: vanishing norm");
  const double inv = 1.0 / std::sqrt(n2);
  for (cplx& a : amplitudes_) a *= inv;
}

Ket Ket::basis(std::size_t dim, std::size_t index) {
  require(index < dim, "Ket::basis: index out of range");
  std::vector<cplx> amps(dim, cplx{0.0, 0.0});
  amps[index] = 1.0;
  return Ket(std::move(amps));
}

ComplexMatrix Ket::projector() const {
  ComplexMatrix out(dim(), dim());
  for (std::size_t r = 0; r < dim(); ++r)
    for (std::size_t c = 0; c < dim(); ++c) out(r, c) = amplitudes_[r] * std::conj(amplitudes_[c]);
  return out;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const cplx aij = a(i1, j1);
      if (aij == cplx{0.0, 0.0}) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
          out(i1 * b.rows() + i2, j1 * b.cols() + j2) = aij * b(i2, j2);
    }
  return out;
}

Ket tensor(const Ket& a, const Ket& b) {
  std::vector<cplx> amps(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) amps[i * b.dim() + j] = a[i] * b[j];
  return Ket(std::move(amps));
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, const std::vector<std::size_t>& factor_dims,
                            const std::vector<std::size_t>& keep) {
  require(rho.rows() == rho.cols(), "partial_trace: matrix must be square");
  std::size_t total = 1;
  for (std::size_t d : factor_dims) total *= d;
  require(total == rho.rows(), "partial_trace: factor dimensions do not match matrix dimension");
  require(!keep.empty(), "partial_trace: keep set must not be empty");

  std::vector<std::size_t> kept = keep;
  std::sort(kept.begin(), kept.end());
  require(std::adjacent_find(kept.begin(), kept.end()) == kept.end(),
          "partial_trace: duplicate keep index");
  require(kept.back() < factor_dims.size(), "partial_trace: keep index out of range");

  std::vector<std::size_t> traced;
  for (std::size_t f = 0; f < factor_dims.size(); ++f)
    if (!std::binary_search(kept.begin(), kept.end(), f)) traced.push_back(f);

  // Stride of factor f in the flattened index.
  std::vector<std::size_t> stride(factor_dims.size(), 1);
  for (std::size_t f = factor_dims.size(); f-- > 1;) stride[f - 1] = stride[f] * factor_dims[f];

  std::size_t kept_dim = 1;
  for (std::size_t f : kept) kept_dim *= factor_dims[f];
  std::size_t traced_dim = 1;
  for (std::size_t f : traced) traced_dim *= factor_dims[f];

  // Decompose a flat index over the kept (or traced) factors into the offset
  // it contributes to the full index.
  auto offset_of = [&](std::size_t flat, const std::vector<std::size_t>& factors) {
    std::size_t off = 0;
    for (std::size_t i = factors.size(); i-- > 0;) {
      const std::size_t f = factors[i];
      off += (flat % factor_dims[f]) * stride[f];
      flat /= factor_dims[f];
    }
    return off;
  };

  std::vector<std::size_t> kept_offset(kept_dim), traced_offset(traced_dim);
  for (std::size_t i = 0; i < kept_dim; ++i) kept_offset[i] = offset_of(i, kept);
  for (std::size_t t = 0; t < traced_dim; ++t) traced_offset[t] = offset_of(t, traced);

  ComplexMatrix out(kept_dim, kept_dim);
  for (std::size_t i = 0; i < kept_dim; ++i)
    for (std::size_t j = 0; j < kept_dim; ++j) {
      cplx s = 0.0;
      for (std::size_t t = 0; t < traced_dim; ++t)
        s += rho(kept_offset[i] + traced_offset[t], kept_offset[j] + traced_offset[t]);
      out(i, j) = s;
    }
  return out;
}

Eigensystem hermitian_eigensystem(const ComplexMatrix& m) {
  require(m.rows() == m.cols() && m.rows() > 0,
          "hermitian_eigensystem: matrix must be square and non-empty");
  const std::size_t n = m.rows();

  double herm_dev = 0.0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      herm_dev = std::max(herm_dev, std::abs(m(r, c) - std::conj(m(c, r))));
  require(herm_dev <= 1e-10, "hermitian_eigensystem: input is not Hermitian");

  // Work on the symmetrized copy so round-off in the input cannot spoil the
  // rotation updates.
  ComplexMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));

  ComplexMatrix v = ComplexMatrix::identity(n);

  auto off_norm = [&]() {
    double s = 0.0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (r != c) s += std::norm(a(r, c));
    return std::sqrt(s);
  };

  const double threshold = 1e-12 * std::max(1.0, a.frobenius_norm());
  const int max_sweeps = 100;
  bool converged = n < 2;

  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    if (off_norm() <= threshold) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double absb = std::abs(apq);
        if (absb < 1e-300) continue;
        const cplx phase = apq / absb;  // e^{i arg(apq)}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();

        // tan(theta) solving t^2 + 2*tau*t - 1 = 0 with the smaller root.
        const double tau = (app - aqq) / (2.0 * absb);
        const double sgn = (tau >= 0.0) ? 1.0 : -1.0;
        const double t = sgn / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        const cplx s_phase = s * phase;              // s e^{i phi}
        const cplx s_conj = s * std::conj(phase);    // s e^{-i phi}

        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const cplx arp = a(r, p);
          const cplx arq = a(r, q);
          a(r, p) = c * arp + s_conj * arq;
          a(r, q) = -s_phase * arp + c * arq;
          a(p, r) = std::conj(a(r, p));
          a(q, r) = std::conj(a(r, q));
        }
        const double d = 2.0 * c * s * absb;
        a(p, p) = app * c * c + aqq * s * s + d;
        a(q, q) = app * s * s + aqq * c * c - d;
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        for (std::size_t r = 0; r < n; ++r) {
          const cplx vrp = v(r, p);
          const cplx vrq = v(r, q);
          v(r, p) = c * vrp + s_conj * vrq;
          v(r, q) = -s_phase * vrp + c * vrq;
        }
      }
    }
  }
  if (!converged && off_norm() > threshold)
    throw std::runtime_error("hermitian_eigensystem: Jacobi iteration did not converge");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

  Eigensystem eig;
  eig.values.resize(n);
  eig.vectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    eig.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) eig.vectors(r, k) = v(r, order[k]);
  }
  return eig;
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m) {
  Eigensystem eig = hermitian_eigensystem(m);
  for (double& lambda : eig.values) {
    if (lambda < -1e-10)
      throw std::invalid_argument("matrix_sqrt_psd: matrix has a genuinely negative eigenvalue");
    if (lambda < 0.0) lambda = 0.0;
  }
  const std::size_t n = m.rows();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double root = std::sqrt(eig.values[k]);
    if (root == 0.0) continue;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        out(r, c) += root * eig.vectors(r, k) * std::conj(eig.vectors(c, k));
  }
  return out;
}

ComplexMatrix symmetric_projector(int n) {
  require(n >= 1 && n <= 12, "symmetric_projector: qubit count must be in [1, 12]");
  const std::size_t dim = std::size_t{1} << n;
  ComplexMatrix p(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const int k = std::popcount(r);
    const double value = 1.0 / binomial(n, k);
    for (std::size_t c = 0; c < dim; ++c)
      if (std::popcount(c) == k) p(r, c) = value;
  }
  return p;
}

double state_fidelity(const Ket& psi, const ComplexMatrix& rho) {
  require(rho.rows() == rho.cols() && rho.rows() == psi.dim(),
          "state_fidelity: dimension mismatch");
  cplx f = 0.0;
  for (std::size_t r = 0; r < rho.rows(); ++r)
    for (std::size_t c = 0; c < rho.cols(); ++c) f += std::conj(psi[r]) * rho(r, c) * psi[c];
  return std::clamp(f.real(), 0.0, 1.0);
}

double purity(const ComplexMatrix& rho) {
  require(is_density_matrix(rho), "purity: input is not a density matrix");
  // Tr(rho^2) = squared Frobenius norm for Hermitian rho.
  double s = 0.0;
  for (const cplx& z : rho.entries()) s += std::norm(z);
  return s;
}

bool is_density_matrix(const ComplexMatrix& rho, double tol) {
  if (rho.rows() != rho.cols() || rho.rows() == 0 || !rho.is_finite()) return false;
  for (std::size_t r = 0; r < rho.rows(); ++r)
    for (std::size_t c = 0; c < rho.cols(); ++c)
      if (std::abs(rho(r, c) - std::conj(rho(c, r))) > tol) return false;
  if (std::abs(rho.trace() - cplx{1.0, 0.0}) > tol) return false;
  return min_eigenvalue(rho) >= -tol;
}

double min_eigenvalue(const ComplexMatrix& m) {
  const Eigensystem eig = hermitian_eigensystem(m);
  return eig.values.back();
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    return std::numeric_limits<double>::infinity();
  double d = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    d = std::max(d, std::abs(a.entries()[i] - b.entries()[i]));
  return d;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double result = 1.0;
  for (int i = 1; i <= k; ++i) result = result * double(n - k + i) / double(i);
  return result;
}

}  // namespace clonesim
