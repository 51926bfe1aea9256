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

#include "clonesim/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "clonesim/cloning.hpp"
#include "clonesim/gates.hpp"

namespace clonesim {

namespace {

ComplexMatrix sigma_y_pair() {
  ComplexMatrix sy(2, 2);
  sy(0, 1) = cplx{0.0, -1.0};
  sy(1, 0) = cplx{0.0, 1.0};
  return tensor(sy, sy);
}

ComplexMatrix pseudo_pure_qubit(double x, const Ket& pure) {
  return pseudo_pure_density(PseudoPureState(x, pure, 1));
}

double normalized_overlap(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  cplx overlap = 0.0;
  for (std::size_t r = 0; r < rho.rows(); ++r)
    for (std::size_t c = 0; c < rho.cols(); ++c) overlap += rho(r, c) * sigma(c, r);
  double p_rho = 0.0, p_sigma = 0.0;
  for (const cplx& z : rho.entries()) p_rho += std::norm(z);
  for (const cplx& z : sigma.entries()) p_sigma += std::norm(z);
  return overlap.real() / std::sqrt(p_rho * p_sigma);
}

}  // namespace

void SweepTable::append(SweepRow row) {
  auto pos = std::lower_bound(rows.begin(), rows.end(), row.parameter,
                              [](const SweepRow& r, double p) { return r.parameter < p; });
  if (pos != rows.end() && pos->parameter == row.parameter)
    throw std::invalid_argument("SweepTable: duplicate parameter value");
  rows.insert(pos, std::move(row));
}

double concurrence(const ComplexMatrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4 || !is_density_matrix(rho))
    throw std::invalid_argument("concurrence: input is not a 2-qubit density matrix");

  const ComplexMatrix yy = sigma_y_pair();
  const ComplexMatrix rho_tilde = yy * rho.conjugate() * yy;
  const ComplexMatrix root = matrix_sqrt_psd(rho);
  // Same spectrum as rho * rho_tilde, but Hermitian and PSD.
  const ComplexMatrix herm = root * rho_tilde * root;

  Eigensystem eig = hermitian_eigensystem(herm);
  // Round-off in the sqrt/multiply chain leaves zero eigenvalues at ~1e-15;
  // taking their square root would inflate them to ~3e-8, so clamp relative
  // to the dominant eigenvalue before the root.
  const double floor = 1e-12 * std::max(eig.values[0], 0.0);
  std::vector<double> lambda;
  for (double v : eig.values) lambda.push_back(v <= floor ? 0.0 : std::sqrt(v));
  std::sort(lambda.begin(), lambda.end(), std::greater<double>());
  return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

SweepTable cnot_concurrence_sweep(const std::vector<double>& x_grid) {
  const Ket plus({cplx{1.0, 0.0}, cplx{1.0, 0.0}});
  const Ket zero = Ket::basis(2, 0);
  const GateMatrix cnot = standard_cnot();

  SweepTable table;
  table.parameter_name = "x";
  table.value_names = {"concurrence_measured", "concurrence_formula"};
  table.metadata["gate"] = "basis C-NOT";
  table.metadata["inputs"] = "x|+><+|+(1-x)I/2 (x) x|0><0|+(1-x)I/2";

  for (double x : x_grid) {
    if (!(x >= 0.0 && x <= 1.0))
      throw std::invalid_argument("cnot_concurrence_sweep: grid value outside [0, 1]");
    const ComplexMatrix rho_in = tensor(pseudo_pure_qubit(x, plus), pseudo_pure_qubit(x, zero));
    const ComplexMatrix rho_out = apply_unitary(rho_in, cnot, {0, 1}, 2);
    const double formula = std::max(0.0, 0.5 * (x * x + 2.0 * x - 1.0));
    table.append({x, {concurrence(rho_out), formula}});
  }
  return table;
}

PurityPreservationReport purity_preservation_report(double epsilon, double alpha, double xi) {
  const RealQubitState input(alpha);
  const ComplexMatrix rho = pseudo_pure_qubit(epsilon, real_ket(input));
  const ComplexMatrix rho_out = apply_unitary(rho, rotation_gate(xi), {0}, 1);

  const Ket rotated = real_ket(RealQubitState(alpha + xi));
  // <psi'|rho'|psi'> = eps + (1 - eps)/2 for a pseudo-pure state.
  const double recovered = 2.0 * state_fidelity(rotated, rho_out) - 1.0;
  return {epsilon, input.alpha(), xi, recovered, std::abs(recovered - epsilon)};
}

SweepTable pseudo_pure_cloning_sweep(const std::vector<double>& eps_grid,
                                     PseudoPureCloneMode mode) {
  const Ket zero = Ket::basis(2, 0);

  SweepTable table;
  table.parameter_name = "epsilon";
  table.value_names = {"clone_overlap_normalized", "clone_fidelity_uhlmann"};
  table.metadata["overlap_convention"] = "Tr(rho sigma)/sqrt(Tr rho^2 Tr sigma^2)";
  table.metadata["fidelity_convention"] = "Uhlmann (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2";
  table.metadata["mode"] =
      mode == PseudoPureCloneMode::kN1Channel ? "n1-channel" : "ensemble-n2";

  constexpr int kGridPoints = 64;

  for (double eps : eps_grid) {
    if (!(eps >= 0.0 && eps <= 1.0))
      throw std::invalid_argument("pseudo_pure_cloning_sweep: grid value outside [0, 1]");
    const ComplexMatrix ideal = pseudo_pure_qubit(eps, zero);

    ComplexMatrix clone(2, 2);
    if (mode == PseudoPureCloneMode::kN1Channel) {
      const CloneOutput out = universal_clone(ideal, 1, 2);
      clone = partial_trace(out.joint, {2, 2}, {0});
    } else {
      // 2 -> 3 cloning demands pure inputs; expand the pseudo-pure state over
      // the preparation ensemble: eps * psi + (1 - eps) * uniform main circle.
      ComplexMatrix joint = universal_clone(zero.projector(), 2, 3).joint * cplx{eps, 0.0};
      ComplexMatrix averaged(8, 8);
      for (int k = 0; k < kGridPoints; ++k) {
        const Ket member =
            real_ket(RealQubitState(2.0 * std::numbers::pi * double(k) / double(kGridPoints)));
        averaged += universal_clone(member.projector(), 2, 3).joint;
      }
      joint += averaged * cplx{(1.0 - eps) / double(kGridPoints), 0.0};
      clone = partial_trace(joint, {2, 2, 2}, {0});
    }
    table.append({eps, {normalized_overlap(clone, ideal), uhlmann_fidelity(ideal, clone)}});
  }
  return table;
}

double uhlmann_fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols())
    throw std::invalid_argument("uhlmann_fidelity: dimension mismatch");
  const ComplexMatrix root = matrix_sqrt_psd(rho);
  const Eigensystem eig = hermitian_eigensystem(root * sigma * root);
  double sum = 0.0;
  for (double v : eig.values) sum += std::sqrt(std::max(v, 0.0));
  return std::min(1.0, sum * sum);
}

}  // namespace clonesim
