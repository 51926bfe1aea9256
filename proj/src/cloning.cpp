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

#include "clonesim/cloning.hpp"

#include <cmath>
#include <stdexcept>

namespace clonesim {

CloneOutput universal_clone(const ComplexMatrix& sigma, int n_in, int m_out) {
  if (n_in < 1) throw std::invalid_argument("universal_clone: N must be >= 1");
  if (m_out <= n_in) throw std::invalid_argument("universal_clone: M must exceed N");
  if (m_out > 8) throw std::invalid_argument("universal_clone: M must be <= 8");
  if (sigma.rows() != 2 || sigma.cols() != 2 || !is_density_matrix(sigma))
    throw std::invalid_argument("universal_clone: input is not a single-qubit density matrix");
  if (n_in >= 2) {
    // The projector sandwich is trace preserving on sigma^(x)N only for pure
    // sigma once N >= 2; mixed inputs must be decomposed by the caller.
    double p = 0.0;
    for (const cplx& z : sigma.entries()) p += std::norm(z);
    if (p < 1.0 - 1e-9)
      throw std::invalid_argument("universal_clone: mixed input requires N = 1");
  }

  ComplexMatrix in = sigma;
  for (int i = 1; i < n_in; ++i) in = tensor(in, sigma);
  for (int i = n_in; i < m_out; ++i) in = tensor(in, ComplexMatrix::identity(2));

  const ComplexMatrix s_m = symmetric_projector(m_out);
  const double weight = double(n_in + 1) / double(m_out + 1);
  CloneOutput out{s_m * in * s_m * cplx{weight, 0.0}, n_in, m_out};

  if (std::abs(out.joint.trace() - cplx{1.0, 0.0}) > 1e-10)
    throw std::runtime_error("universal_clone: output trace deviates from 1");
  return out;
}

double universal_fidelity_formula(int n) {
  if (n < 1) throw std::invalid_argument("universal_fidelity_formula: N must be >= 1");
  return 1.0 - 1.0 / (double(n + 1) * double(n + 2));
}

double pc_upper_bound(int n, PcVariant variant) {
  if (n < 1) throw std::invalid_argument("pc_upper_bound: N must be >= 1");
  double num = 0.0;
  for (int i = 0; i <= n - 1; ++i) num += std::sqrt(binomial(n, i) * binomial(n, i + 1));
  double den = 0.0;
  for (int j = 0; j <= n; ++j) den += std::sqrt(binomial(n + 1, j) * binomial(n + 1, j + 1));
  const double ratio = num / den;
  return variant == PcVariant::kAsPrinted ? 2.0 * ratio : 0.5 + ratio;
}

double measured_clone_fidelity(const CloneOutput& out, const Ket& psi, int clone_index) {
  if (clone_index < 0 || clone_index >= out.m_out)
    throw std::invalid_argument("measured_clone_fidelity: clone index out of range");
  if (psi.dim() != 2)
    throw std::invalid_argument("measured_clone_fidelity: psi must be a single qubit");
  const std::vector<std::size_t> dims(std::size_t(out.m_out), 2);
  const ComplexMatrix reduced =
      partial_trace(out.joint, dims, {std::size_t(clone_index)});
  return state_fidelity(psi, reduced);
}

std::vector<Fig2Row> figure2_table(int n_max, PcVariant variant) {
  if (n_max < 1 || n_max > 50) throw std::invalid_argument("figure2_table: N_max must be in [1, 50]");
  std::vector<Fig2Row> rows;
  rows.reserve(std::size_t(n_max));
  for (int n = 1; n <= n_max; ++n)
    rows.push_back({n, universal_fidelity_formula(n), pc_upper_bound(n, variant)});
  return rows;
}

}  // namespace clonesim
