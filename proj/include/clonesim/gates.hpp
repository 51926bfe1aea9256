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

#ifndef CLONESIM_GATES_HPP
#define CLONESIM_GATES_HPP

#include <vector>

#include "clonesim/qmath.hpp"

namespace clonesim {

/// Unitary matrix wrapper; construction verifies U^dag U = I within 1e-12.
class GateMatrix {
 public:
  explicit GateMatrix(ComplexMatrix matrix);

  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t dim() const { return matrix_.rows(); }

 private:
  ComplexMatrix matrix_;
};

/// |0><0| (x) I + |1><1| (x) sigma_x, qubit 0 = control.
GateMatrix standard_cnot();

/// [[0, -1], [1, 0]] = -i sigma_y; flips any main-circle state to its
/// orthogonal regardless of basis.
GateMatrix universal_not();

/// cos(xi/2) I + sin(xi/2) NOT; rotates main-circle states by xi.
GateMatrix rotation_gate(double xi);

/// U rho U^dag with `gate` embedded at `target_qubits` (identity elsewhere)
/// in an n-qubit register. Qubit 0 is the leftmost (most significant) factor;
/// gate qubit j acts on register qubit target_qubits[j].
ComplexMatrix apply_unitary(const ComplexMatrix& rho, const GateMatrix& gate,
                            const std::vector<int>& target_qubits, int qubit_count);

/// The full 2^n unitary with `gate` placed at the target positions.
ComplexMatrix embed_unitary(const GateMatrix& gate, const std::vector<int>& target_qubits,
                            int qubit_count);

}  // namespace clonesim

#endif  // CLONESIM_GATES_HPP
