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

#include "clonesim/states.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace clonesim {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

RealQubitState::RealQubitState(double alpha) {
  if (!std::isfinite(alpha)) throw std::invalid_argument("RealQubitState: non-finite angle");
  alpha_ = std::fmod(alpha, kTwoPi);
  if (alpha_ < 0.0) alpha_ += kTwoPi;
  if (alpha_ >= kTwoPi) alpha_ = 0.0;  // fmod rounding at the seam
}

PseudoPureState::PseudoPureState(double epsilon, Ket pure_part, int qubit_count)
    : epsilon(epsilon), pure_part(std::move(pure_part)), qubit_count(qubit_count) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0))
    throw std::invalid_argument("PseudoPureState: epsilon must lie in [0, 1]");
  if (qubit_count < 1) throw std::invalid_argument("PseudoPureState: qubit count must be >= 1");
  if (this->pure_part.dim() != (std::size_t{1} << qubit_count))
    throw std::invalid_argument("PseudoPureState: pure part dimension mismatch");
}

Ket real_ket(const RealQubitState& s) {
  return Ket({cplx{std::cos(s.alpha() / 2.0), 0.0}, cplx{std::sin(s.alpha() / 2.0), 0.0}});
}

ComplexMatrix pseudo_pure_density(const PseudoPureState& p) {
  const std::size_t dim = std::size_t{1} << p.qubit_count;
  ComplexMatrix rho = p.pure_part.projector() * cplx{p.epsilon, 0.0};
  const double mixed_weight = (1.0 - p.epsilon) / double(dim);
  for (std::size_t i = 0; i < dim; ++i) rho(i, i) += mixed_weight;
  return rho;
}

BlochVector bloch_vector(const ComplexMatrix& rho) {
  if (rho.rows() != 2 || rho.cols() != 2)
    throw std::invalid_argument("bloch_vector: expected a single-qubit density matrix");
  const cplx r01 = rho(0, 1);
  return BlochVector{
      2.0 * r01.real(),
      -2.0 * r01.imag(),
      rho(0, 0).real() - rho(1, 1).real(),
  };
}

RealQubitState orthogonal_real(const RealQubitState& s) {
  return RealQubitState(s.alpha() + std::numbers::pi);
}

double main_circle_angle(const ComplexMatrix& rho) {
  const BlochVector b = bloch_vector(rho);
  if (std::hypot(b.x, b.z) < 1e-12) return 0.0;
  return RealQubitState(std::atan2(b.x, b.z)).alpha();
}

}  // namespace clonesim
