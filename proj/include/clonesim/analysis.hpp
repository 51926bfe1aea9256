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

#ifndef CLONESIM_ANALYSIS_HPP
#define CLONESIM_ANALYSIS_HPP

#include <map>
#include <string>
#include <vector>

#include "clonesim/qmath.hpp"
#include "clonesim/states.hpp"

namespace clonesim {

/// One sweep result: a parameter value plus the measured columns.
struct SweepRow {
  double parameter;
  std::vector<double> values;
};

/// Parameter sweep output; rows are kept sorted ascending by parameter and
/// duplicate parameter values are rejected.
struct SweepTable {
  std::string parameter_name;
  std::vector<std::string> value_names;
  std::vector<SweepRow> rows;
  std::map<std::string, std::string> metadata;

  void append(SweepRow row);
};

/// Wootters concurrence of a two-qubit state, computed through the Hermitian
/// form sqrt(rho) rho_tilde sqrt(rho) so only Hermitian eigensolves are
/// needed. rho_tilde = (sigma_y (x) sigma_y) rho* (sigma_y (x) sigma_y).
double concurrence(const ComplexMatrix& rho);

/// Entanglement decay of the basis C-NOT on pseudo-pure inputs
/// rho_c = x|+><+| + (1-x) I/2 and rho_t = x|0><0| + (1-x) I/2.
/// Columns: measured concurrence and the closed form max{0, (x^2+2x-1)/2}.
SweepTable cnot_concurrence_sweep(const std::vector<double>& x_grid);

struct PurityPreservationReport {
  double epsilon_in;
  double alpha;
  double xi;
  double epsilon_recovered;
  double delta_epsilon;
};

/// Applies the rotation gate U(xi) to a pseudo-pure main-circle state and
/// recovers the purity parameter from the overlap with the rotated pure part.
PurityPreservationReport purity_preservation_report(double epsilon, double alpha, double xi);

enum class PseudoPureCloneMode {
  kN1Channel,    // 1 -> 2 cloner applied directly to the mixed input
  kEnsembleN2,   // 2 -> 3 cloner, pseudo-pure input expanded by convexity
};

/// Clone fidelity of pseudo-pure inputs against the ideal pseudo-pure output,
/// reported both as normalized overlap Tr(rho sigma)/sqrt(Tr rho^2 Tr sigma^2)
/// and as Uhlmann fidelity (which anchors the endpoints: 1 at eps = 0 and the
/// pure-state clone fidelity at eps = 1).
SweepTable pseudo_pure_cloning_sweep(const std::vector<double>& eps_grid,
                                     PseudoPureCloneMode mode);

/// Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2.
double uhlmann_fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma);

}  // namespace clonesim

#endif  // CLONESIM_ANALYSIS_HPP
