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

#ifndef CLONESIM_STATES_HPP
#define CLONESIM_STATES_HPP

#include "clonesim/qmath.hpp"

namespace clonesim {

/// Pure qubit state on the main circle (the x-z great circle of the Bloch
/// sphere), parameterized by a single angle normalized into [0, 2*pi).
class RealQubitState {
 public:
  explicit RealQubitState(double alpha);

  double alpha() const { return alpha_; }

 private:
  double alpha_;
};

/// Mixture epsilon |psi><psi| + (1 - epsilon) I / 2^n.
struct PseudoPureState {
  PseudoPureState(double epsilon, Ket pure_part, int qubit_count);

  double epsilon;
  Ket pure_part;
  int qubit_count;
};

/// Amplitudes (cos(alpha/2), sin(alpha/2)); both real.
Ket real_ket(const RealQubitState& s);

ComplexMatrix pseudo_pure_density(const PseudoPureState& p);

struct BlochVector {
  double x;
  double y;
  double z;
};

/// (Tr(rho sigma_x), Tr(rho sigma_y), Tr(rho sigma_z)) of a single-qubit state.
BlochVector bloch_vector(const ComplexMatrix& rho);

/// The state at alpha + pi, orthogonal to the input on the main circle.
RealQubitState orthogonal_real(const RealQubitState& s);

/// Main-circle angle atan2(bloch_x, bloch_z) of a single-qubit state,
/// normalized into [0, 2*pi); 0 for states with no x-z polarization.
double main_circle_angle(const ComplexMatrix& rho);

}  // namespace clonesim

#endif  // CLONESIM_STATES_HPP
