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

#ifndef CLONESIM_CLONING_HPP
#define CLONESIM_CLONING_HPP

#include <vector>

#include "clonesim/qmath.hpp"

namespace clonesim {

/// Joint state of M approximate copies produced from N identical inputs.
/// Supported on the M-qubit symmetric subspace.
struct CloneOutput {
  ComplexMatrix joint;
  int n_in;
  int m_out;
};

/// Optimal universal symmetric N -> M cloner:
///   joint = (N+1)/(M+1) * S_M (sigma^(x)N (x) I^(x)(M-N)) S_M
/// with S_M the symmetric projector. Mixed sigma is accepted only for N = 1,
/// where the map stays trace preserving; for N >= 2 the input must be pure.
CloneOutput universal_clone(const ComplexMatrix& sigma, int n_in, int m_out);

/// Closed-form optimal fidelity of the symmetric N -> N+1 cloner:
/// 1 - 1/((N+1)(N+2)).
double universal_fidelity_formula(int n);

enum class PcVariant {
  kAsPrinted,  // 2 * ratio of binomial sums; below the universal value at small N
  kAnchored,   // 1/2 + the same ratio; reproduces 1/2 + sqrt(1/8) at N = 1
};

/// Upper bound for the phase-covariant (main-circle) N -> N+1 cloning
/// fidelity, built from sqrt(binomial) sums. The anchored variant is the
/// default everywhere; the as-printed variant is kept for transparency.
double pc_upper_bound(int n, PcVariant variant = PcVariant::kAnchored);

/// Fidelity between `psi` and the reduced state of clone `clone_index`.
double measured_clone_fidelity(const CloneOutput& out, const Ket& psi, int clone_index);

struct Fig2Row {
  int n;
  double f_universal;
  double f_pc_bound;
};

/// Rows (N, F_universal, F_pc_bound) for N = 1..n_max.
std::vector<Fig2Row> figure2_table(int n_max, PcVariant variant = PcVariant::kAnchored);

}  // namespace clonesim

#endif  // CLONESIM_CLONING_HPP
