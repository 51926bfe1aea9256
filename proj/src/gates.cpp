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

#include "clonesim/gates.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace clonesim {

GateMatrix::GateMatrix(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0)
    throw std::invalid_argument("GateMatrix: matrix must be square");
  const ComplexMatrix gram = matrix_.dagger() * matrix_;
  if (max_abs_diff(gram, ComplexMatrix::identity(matrix_.rows())) > 1e-12)
    throw std::invalid_argument("GateMatrix: matrix is not unitary");
}

GateMatrix standard_cnot() {
  ComplexMatrix u(4, 4);
  u(0, 0) = 1.0;
  u(1, 1) = 1.0;
  u(2, 3) = 1.0;
  u(3, 2) = 1.0;
  return GateMatrix(u);
}

GateMatrix universal_not() {
  ComplexMatrix u(2, 2);
  u(0, 1) = -1.0;
  u(1, 0) = 1.0;
  return GateMatrix(u);
}

GateMatrix rotation_gate(double xi) {
  const double c = std::cos(xi / 2.0);
  const double s = std::sin(xi / 2.0);
  ComplexMatrix u(2, 2);
  u(0, 0) = c;
  u(0, 1) = -s;
  u(1, 0) = s;
  u(1, 1) = c;
  return GateMatrix(u);
}

ComplexMatrix embed_unitary(const GateMatrix& gate, const std::vector<int>& target_qubits,
                            int qubit_count) {
  if (qubit_count < 1 || qubit_count > 16)
    throw std::invalid_argument("embed_unitary: unsupported qubit count");
  const std::size_t k = target_qubits.size();
  if (gate.dim() != (std::size_t{1} << k))
    throw std::invalid_argument("embed_unitary: gate dimension does not match target count");
  std::set<int> distinct(target_qubits.begin(), target_qubits.end());
  if (distinct.size() != k) throw std::invalid_argument("embed_unitary: duplicate target qubit");
  for (int q : target_qubits)
    if (q < 0 || q >= qubit_count)
      throw std::invalid_argument("embed_unitary: target qubit out of range");

  const std::size_t dim = std::size_t{1} << qubit_count;
  // Qubit q occupies bit (qubit_count - 1 - q); gate qubit j is the j-th
  // most significant bit of the gate index.
  auto gate_index = [&](std::size_t reg_index) {
    std::size_t g = 0;
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t bit = (reg_index >> (qubit_count - 1 - target_qubits[j])) & 1;
      g |= bit << (k - 1 - j);
    }
    return g;
  };
  std::size_t rest_mask = dim - 1;
  for (int q : target_qubits) rest_mask &= ~(std::size_t{1} << (qubit_count - 1 - q));

  ComplexMatrix u(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const std::size_t gr = gate_index(r);
    for (std::size_t c = 0; c < dim; ++c) {
      if ((r & rest_mask) != (c & rest_mask)) continue;
      u(r, c) = gate.matrix()(gr, gate_index(c));
    }
  }
  return u;
}

ComplexMatrix apply_unitary(const ComplexMatrix& rho, const GateMatrix& gate,
                            const std::vector<int>& target_qubits, int qubit_count) {
  const std::size_t dim = std::size_t{1} << qubit_count;
  if (rho.rows() != dim || rho.cols() != dim)
    throw std::invalid_argument("apply_unitary: state dimension does not match qubit count");
  const ComplexMatrix u = embed_unitary(gate, target_qubits, qubit_count);
  return u * rho * u.dagger();
}

}  // namespace clonesim
