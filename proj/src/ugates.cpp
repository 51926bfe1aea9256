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

#include "clonesim/ugates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "clonesim/cloning.hpp"

namespace clonesim {

namespace {

// Amplitudes of the main-circle cloner equations.
const double kA = 0.5;
const double kB = std::sqrt(0.125);

Ket apply_gate_to_ket(const GateMatrix& gate, const Ket& psi) {
  std::vector<cplx> amps(psi.dim(), cplx{0.0, 0.0});
  for (std::size_t r = 0; r < psi.dim(); ++r)
    for (std::size_t c = 0; c < psi.dim(); ++c) amps[r] += gate.matrix()(r, c) * psi[c];
  return Ket(std::move(amps));
}

// Columns of the cloner device on control basis inputs, per the gate's
// defining amplitude equations with blank target |0> (output order:
// control, target, device).
ComplexMatrix cnot_device_columns() {
  ComplexMatrix v(8, 2);
  v(0, 0) = kA + kB;  // |000>
  v(3, 0) = kB;       // |011>
  v(5, 0) = kB;       // |101>
  v(6, 0) = kA - kB;  // |110>
  v(7, 1) = kA + kB;  // |111>
  v(2, 1) = kB;       // |010>
  v(4, 1) = kB;       // |100>
  v(1, 1) = kA - kB;  // |001>
  return v;
}

ComplexMatrix reduced_qubit(const ComplexMatrix& rho, int total_qubits, int index) {
  const std::vector<std::size_t> dims(std::size_t(total_qubits), 2);
  return partial_trace(rho, dims, {std::size_t(index)});
}

}  // namespace

Isometry::Isometry(ComplexMatrix matrix, std::vector<std::size_t> output_dims,
                   std::vector<std::size_t> device_factors)
    : matrix_(std::move(matrix)),
      output_dims_(std::move(output_dims)),
      device_factors_(std::move(device_factors)) {
  std::size_t out_dim = 1;
  for (std::size_t d : output_dims_) out_dim *= d;
  if (out_dim != matrix_.rows() || matrix_.rows() < matrix_.cols())
    throw std::invalid_argument("Isometry: output factor dimensions do not match matrix");
  for (std::size_t f : device_factors_)
    if (f >= output_dims_.size()) throw std::invalid_argument("Isometry: device factor out of range");
  const ComplexMatrix gram = matrix_.dagger() * matrix_;
  if (max_abs_diff(gram, ComplexMatrix::identity(matrix_.cols())) > 1e-12)
    throw std::invalid_argument("Isometry: V^dag V differs from the identity");
}

ComplexMatrix Isometry::conjugate(const ComplexMatrix& rho_in) const {
  if (rho_in.rows() != dim_in() || rho_in.cols() != dim_in())
    throw std::invalid_argument("Isometry::conjugate: input dimension mismatch");
  return matrix_ * rho_in * matrix_.dagger();
}

ComplexMatrix Isometry::apply(const ComplexMatrix& rho_in) const {
  ComplexMatrix full = conjugate(rho_in);
  std::vector<std::size_t> keep;
  for (std::size_t f = 0; f < output_dims_.size(); ++f) {
    bool traced = false;
    for (std::size_t d : device_factors_) traced |= (d == f);
    if (!traced) keep.push_back(f);
  }
  return partial_trace(full, output_dims_, keep);
}

Isometry universal_cnot_isometry() {
  return Isometry(cnot_device_columns(), {2, 2, 2}, {2});
}

ComplexMatrix universal_cnot_extension() {
  const ComplexMatrix v = cnot_device_columns();
  // Extend over the target basis: target |1> rotates the device's target
  // output by pi (NOT on the middle factor).
  const ComplexMatrix not_mid =
      tensor(tensor(ComplexMatrix::identity(2), universal_not().matrix()),
             ComplexMatrix::identity(2));
  const ComplexMatrix rotated = not_mid * v;
  ComplexMatrix ext(8, 4);
  for (std::size_t r = 0; r < 8; ++r) {
    ext(r, 0) = v(r, 0);        // |00>
    ext(r, 1) = rotated(r, 0);  // |01>
    ext(r, 2) = v(r, 1);        // |10>
    ext(r, 3) = rotated(r, 1);  // |11>
  }
  return ext;
}

ChannelResult apply_universal_cnot(const ComplexMatrix& rho_ct) {
  if (rho_ct.rows() != 4 || rho_ct.cols() != 4 || !is_density_matrix(rho_ct))
    throw std::invalid_argument("apply_universal_cnot: input is not a 2-qubit density matrix");

  const ComplexMatrix rho_c = partial_trace(rho_ct, {2, 2}, {0});
  const ComplexMatrix rho_t = partial_trace(rho_ct, {2, 2}, {1});
  const double theta = main_circle_angle(rho_c);
  const double phi = main_circle_angle(rho_t);

  const Isometry device = universal_cnot_isometry();
  ComplexMatrix pair = device.apply(rho_c);
  pair = apply_unitary(pair, rotation_gate(phi), {1}, 2);

  ChannelResult result{
      pair,
      0.0,
      0.0,
      real_ket(RealQubitState(theta)),
      real_ket(RealQubitState(theta + phi)),
      {},
  };
  result.fidelity_control = state_fidelity(result.ideal_control, reduced_qubit(pair, 2, 0));
  result.fidelity_target = state_fidelity(result.ideal_target, reduced_qubit(pair, 2, 1));
  return result;
}

ChannelResult universal_controlled_u(const Ket& psi_c, const GateMatrix& u_fixed) {
  if (psi_c.dim() != 2)
    throw std::invalid_argument("universal_controlled_u: control must be a single qubit");
  if (u_fixed.dim() != 2)
    throw std::invalid_argument("universal_controlled_u: u_fixed must be a single-qubit gate");

  const CloneOutput cloned = universal_clone(psi_c.projector(), 1, 2);
  const ComplexMatrix out = apply_unitary(cloned.joint, u_fixed, {1}, 2);

  ChannelResult result{out, 0.0, 0.0, psi_c, apply_gate_to_ket(u_fixed, psi_c), {}};
  result.fidelity_control = state_fidelity(result.ideal_control, reduced_qubit(out, 2, 0));
  result.fidelity_target = state_fidelity(result.ideal_target, reduced_qubit(out, 2, 1));
  return result;
}

ChannelResult universal_controlled_u_density(const ComplexMatrix& rho_c,
                                             const GateMatrix& u_fixed) {
  if (rho_c.rows() != 2 || !is_density_matrix(rho_c))
    throw std::invalid_argument("universal_controlled_u_density: invalid control state");
  const CloneOutput cloned = universal_clone(rho_c, 1, 2);
  const ComplexMatrix out = apply_unitary(cloned.joint, u_fixed, {1}, 2);

  const Ket ideal_c = real_ket(RealQubitState(main_circle_angle(rho_c)));
  ChannelResult result{out, 0.0, 0.0, ideal_c, apply_gate_to_ket(u_fixed, ideal_c), {}};
  result.fidelity_control = state_fidelity(result.ideal_control, reduced_qubit(out, 2, 0));
  result.fidelity_target = state_fidelity(result.ideal_target, reduced_qubit(out, 2, 1));
  return result;
}

ChannelResult universal_toffoli(const RealQubitState& psi_c, int n_controls,
                                const RealQubitState& chi_t) {
  if (n_controls < 1 || n_controls > 5)
    throw std::invalid_argument("universal_toffoli: control count must be in [1, 5]");

  const Ket psi = real_ket(psi_c);
  const CloneOutput cloned = universal_clone(psi.projector(), n_controls, n_controls + 1);
  const ComplexMatrix out =
      apply_unitary(cloned.joint, rotation_gate(chi_t.alpha()), {n_controls}, n_controls + 1);

  ChannelResult result{
      out,
      0.0,
      0.0,
      psi,
      real_ket(RealQubitState(psi_c.alpha() + chi_t.alpha())),
      {},
  };
  result.fidelity_control =
      state_fidelity(result.ideal_control, reduced_qubit(out, n_controls + 1, 0));
  result.fidelity_target =
      state_fidelity(result.ideal_target, reduced_qubit(out, n_controls + 1, n_controls));
  return result;
}

ChannelResult universal_toffoli_pseudo_pure(double epsilon, const RealQubitState& psi_c,
                                            int n_controls, const RealQubitState& chi_t) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0))
    throw std::invalid_argument("universal_toffoli_pseudo_pure: epsilon must lie in [0, 1]");

  ChannelResult pure = universal_toffoli(psi_c, n_controls, chi_t);
  if (epsilon == 1.0) return pure;

  constexpr int kGridPoints = 64;
  ComplexMatrix averaged(pure.output.rows(), pure.output.cols());
  for (int k = 0; k < kGridPoints; ++k) {
    const RealQubitState member(2.0 * std::numbers::pi * double(k) / double(kGridPoints));
    averaged += universal_toffoli(member, n_controls, chi_t).output;
  }
  averaged *= cplx{1.0 / double(kGridPoints), 0.0};

  ChannelResult result = pure;
  result.output = pure.output * cplx{epsilon, 0.0} + averaged * cplx{1.0 - epsilon, 0.0};
  result.fidelity_control = state_fidelity(
      result.ideal_control, reduced_qubit(result.output, n_controls + 1, 0));
  result.fidelity_target = state_fidelity(
      result.ideal_target, reduced_qubit(result.output, n_controls + 1, n_controls));
  result.notes.push_back("pseudo-pure controls expanded over a uniform 64-point main-circle ensemble");
  return result;
}

int toffoli_budget(double delta) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("toffoli_budget: delta must lie in (0, 1)");
  int n = 1;
  while (1.0 / (double(n + 1) * double(n + 2)) > delta) ++n;
  return n;
}

double algorithm_fidelity_estimate(double f, double zeta) {
  if (!(f > 0.0 && f <= 1.0))
    throw std::invalid_argument("algorithm_fidelity_estimate: F must lie in (0, 1]");
  if (!(zeta >= 0.0))
    throw std::invalid_argument("algorithm_fidelity_estimate: zeta must be >= 0");
  return std::pow(f, zeta);
}

}  // namespace clonesim
