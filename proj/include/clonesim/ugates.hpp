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

#ifndef CLONESIM_UGATES_HPP
#define CLONESIM_UGATES_HPP

#include <string>
#include <vector>

#include "clonesim/gates.hpp"
#include "clonesim/qmath.hpp"
#include "clonesim/states.hpp"

namespace clonesim {

/// Fidelity of the main-circle (phase-covariant) 1 -> 2 cloner: 1/2 + sqrt(1/8).
inline constexpr double kPcCnotFidelity = 0.85355339059327373;

/// Inner-product-preserving map into a larger space; a channel arises by
/// applying it and tracing out the device factors. Construction verifies
/// V^dag V = I within 1e-12.
class Isometry {
 public:
  Isometry(ComplexMatrix matrix, std::vector<std::size_t> output_dims,
           std::vector<std::size_t> device_factors);

  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t dim_in() const { return matrix_.cols(); }
  std::size_t dim_out() const { return matrix_.rows(); }
  const std::vector<std::size_t>& output_dims() const { return output_dims_; }
  const std::vector<std::size_t>& device_factors() const { return device_factors_; }

  /// V rho V^dag on the full output space.
  ComplexMatrix conjugate(const ComplexMatrix& rho_in) const;

  /// V rho V^dag with the device factors traced out.
  ComplexMatrix apply(const ComplexMatrix& rho_in) const;

 private:
  ComplexMatrix matrix_;
  std::vector<std::size_t> output_dims_;
  std::vector<std::size_t> device_factors_;
};

/// Output of a cloning-based gate: the register state with the device traced
/// out, plus measured fidelities against the ideal pure outputs.
struct ChannelResult {
  ComplexMatrix output;
  double fidelity_control;
  double fidelity_target;
  Ket ideal_control;
  Ket ideal_target;
  std::vector<std::string> notes;
};

/// The physical device behind the basis-independent C-NOT: the main-circle
/// 1 -> 2 cloner written on the control basis states, mapping the control
/// qubit into (control, target, device). Columns are the gate equations at
/// blank target |0>; a rotation by the target angle reproduces them at any
/// main-circle target.
Isometry universal_cnot_isometry();

/// Linear extension of the C-NOT gate's defining equations over the
/// computational target basis (8x4). It reproduces that action on every
/// product input with a main-circle target, but it is NOT inner-product
/// preserving across distinct targets:
/// <V(0,chi)|V(1,chi')> = 4 b^2 <chi|NOT|chi'>. Kept for cross-checking the
/// channel against the defining equations.
ComplexMatrix universal_cnot_extension();

/// Basis-independent C-NOT channel on a two-qubit state (control = qubit 0):
/// the control marginal is cloned through the main-circle device and the
/// second output is rotated by the target's main-circle angle. On product
/// inputs of main-circle states both fidelities equal 1/2 + sqrt(1/8),
/// independent of the angles.
ChannelResult apply_universal_cnot(const ComplexMatrix& rho_ct);

/// Controlled-U for an arbitrary pure control: universal 1 -> 2 cloning of
/// psi followed by u_fixed on the second copy. Both fidelities are 5/6.
ChannelResult universal_controlled_u(const Ket& psi_c, const GateMatrix& u_fixed);

/// Same construction driven by a (possibly mixed) control density matrix;
/// ideal outputs are read from the control's main-circle angle.
ChannelResult universal_controlled_u_density(const ComplexMatrix& rho_c,
                                             const GateMatrix& u_fixed);

/// Basis-independent Toffoli: N -> N+1 universal cloning of the control state
/// followed by a rotation by the target angle on the last slot. Target
/// fidelity equals 1 - 1/((N+1)(N+2)). Requires 1 <= N <= 5.
ChannelResult universal_toffoli(const RealQubitState& psi_c, int n_controls,
                                const RealQubitState& chi_t);

/// Toffoli on pseudo-pure controls via ensemble convexity:
/// epsilon * channel(psi) + (1 - epsilon) * average of channel over a
/// uniform 64-point grid of main-circle controls.
ChannelResult universal_toffoli_pseudo_pure(double epsilon, const RealQubitState& psi_c,
                                            int n_controls, const RealQubitState& chi_t);

/// Smallest N >= 1 with per-gate loss 1/((N+1)(N+2)) <= delta.
int toffoli_budget(double delta);

/// Overall algorithm fidelity estimate F^zeta.
double algorithm_fidelity_estimate(double f, double zeta);

}  // namespace clonesim

#endif  // CLONESIM_UGATES_HPP
