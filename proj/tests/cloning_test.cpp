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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "clonesim/cloning.hpp"
#include "clonesim/states.hpp"
#include "test_support.hpp"

using namespace clonesim;
using clonesim::testing::random_density_matrix;
using clonesim::testing::random_pure_ket;

TEST_CASE("universal_clone 1->2: fidelity 5/6 for any pure input and either clone") {
  std::mt19937 rng(31);
  for (int sample = 0; sample < 25; ++sample) {
    const Ket psi = random_pure_ket(2, rng);
    const CloneOutput out = universal_clone(psi.projector(), 1, 2);
    const double f0 = measured_clone_fidelity(out, psi, 0);
    const double f1 = measured_clone_fidelity(out, psi, 1);
    CHECK(std::abs(f0 - 5.0 / 6.0) < 1e-12);
    CHECK(std::abs(f1 - 5.0 / 6.0) < 1e-12);
    CHECK(std::abs(f0 - f1) < 1e-12);
  }
}

TEST_CASE("universal_clone 1->2: maximally mixed input is a fixed point") {
  ComplexMatrix half = ComplexMatrix::identity(2);
  half *= cplx{0.5, 0.0};
  const CloneOutput out = universal_clone(half, 1, 2);
  for (int idx : {0, 1}) {
    const ComplexMatrix clone = partial_trace(out.joint, {2, 2}, {std::size_t(idx)});
    CHECK(max_abs_diff(clone, half) < 1e-12);
  }
}

TEST_CASE("universal_clone 2->3: clone fidelity 11/12") {
  const Ket zero = Ket::basis(2, 0);
  const CloneOutput out = universal_clone(zero.projector(), 2, 3);
  for (int idx : {0, 1, 2})
    CHECK(std::abs(measured_clone_fidelity(out, zero, idx) - 11.0 / 12.0) < 1e-12);
}

TEST_CASE("universal_clone 3->4: clone fidelity 0.95") {
  const Ket zero = Ket::basis(2, 0);
  const CloneOutput out = universal_clone(zero.projector(), 3, 4);
  for (int idx = 0; idx < 4; ++idx)
    CHECK(std::abs(measured_clone_fidelity(out, zero, idx) - 0.95) < 1e-12);
}

TEST_CASE("universal_clone: simulation matches the closed form for N -> N+1") {
  for (int n = 1; n <= 5; ++n) {
    const Ket psi = real_ket(RealQubitState(2.0 * double(n)));
    const CloneOutput out = universal_clone(psi.projector(), n, n + 1);
    CHECK(std::abs(measured_clone_fidelity(out, psi, 0) - universal_fidelity_formula(n)) < 1e-10);
  }
}

TEST_CASE("universal_clone: output is PSD, unit trace, symmetric-subspace supported") {
  std::mt19937 rng(41);
  for (auto [n, m] : {std::pair{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}, {1, 6}}) {
    const Ket psi = random_pure_ket(2, rng);
    const CloneOutput out = universal_clone(psi.projector(), n, m);
    CHECK(std::abs(out.joint.trace() - cplx{1.0, 0.0}) < 1e-10);
    CHECK(min_eigenvalue(out.joint) > -1e-10);
    const ComplexMatrix s = symmetric_projector(m);
    CHECK(max_abs_diff(s * out.joint * s, out.joint) < 1e-10);
  }
}

TEST_CASE("universal_clone: clone fidelity independent of index and of the pure input") {
  std::mt19937 rng(43);
  for (auto [n, m] : {std::pair{1, 2}, {2, 3}, {2, 4}, {3, 4}, {4, 5}, {5, 6}}) {
    double reference = -1.0;
    for (int sample = 0; sample < 25; ++sample) {
      const Ket psi = random_pure_ket(2, rng);
      const CloneOutput out = universal_clone(psi.projector(), n, m);
      for (int idx = 0; idx < m; ++idx) {
        const double f = measured_clone_fidelity(out, psi, idx);
        if (reference < 0.0) reference = f;
        CHECK(std::abs(f - reference) < 1e-10);
      }
    }
  }
}

TEST_CASE("universal_clone: trace preserving on mixed inputs at N = 1") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix sigma = random_density_matrix(2, rng);
    for (int m : {2, 3}) {
      const CloneOutput out = universal_clone(sigma, 1, m);
      CHECK(std::abs(out.joint.trace() - cplx{1.0, 0.0}) < 1e-10);
      CHECK(min_eigenvalue(out.joint) > -1e-10);
    }
  }
}

TEST_CASE("universal_clone: M = 8 boundary stays physical") {
  const Ket zero = Ket::basis(2, 0);
  const CloneOutput out = universal_clone(zero.projector(), 7, 8);
  CHECK(std::abs(measured_clone_fidelity(out, zero, 0) - universal_fidelity_formula(7)) < 1e-10);
  CHECK(std::abs(out.joint.trace() - cplx{1.0, 0.0}) < 1e-10);
  CHECK(min_eigenvalue(out.joint) > -1e-10);
}

TEST_CASE("universal_clone: mixed inputs rejected for N >= 2, bad shapes rejected") {
  std::mt19937 rng(47);
  const ComplexMatrix mixed = random_density_matrix(2, rng);
  CHECK_THROWS_AS(universal_clone(mixed, 2, 3), std::invalid_argument);

  const ComplexMatrix pure = Ket::basis(2, 0).projector();
  CHECK_THROWS_AS(universal_clone(pure, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(universal_clone(pure, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(universal_clone(pure, 1, 9), std::invalid_argument);
  CHECK_THROWS_AS(universal_clone(ComplexMatrix::identity(2), 1, 2), std::invalid_argument);
}

TEST_CASE("universal_fidelity_formula: values, monotonicity, limit") {
  CHECK(universal_fidelity_formula(1) == doctest::Approx(5.0 / 6.0).epsilon(1e-15));
  CHECK(universal_fidelity_formula(2) == doctest::Approx(11.0 / 12.0).epsilon(1e-15));
  CHECK(universal_fidelity_formula(9) == doctest::Approx(1.0 - 1.0 / 110.0).epsilon(1e-15));
  // N = 9 is the first N with loss <= 0.01.
  CHECK(1.0 - universal_fidelity_formula(9) <= 0.01);
  CHECK(1.0 - universal_fidelity_formula(8) > 0.01);

  for (int n = 1; n < 50; ++n)
    CHECK(universal_fidelity_formula(n + 1) > universal_fidelity_formula(n));
  CHECK(universal_fidelity_formula(4000) > 1.0 - 1e-6);
  CHECK_THROWS_AS(universal_fidelity_formula(0), std::invalid_argument);
}

TEST_CASE("pc_upper_bound: anchored and as-printed values at N = 1 and N = 2") {
  CHECK(pc_upper_bound(1, PcVariant::kAnchored) ==
        doctest::Approx(0.5 + std::sqrt(0.125)).epsilon(1e-15));
  CHECK(pc_upper_bound(1, PcVariant::kAsPrinted) ==
        doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));

  // Exact value: 1/2 + 2*sqrt(2)/(3 + 2*sqrt(3)) = 1/2 + (4*sqrt(6) - 6*sqrt(2))/6... = 0.9375591990
  const double expected_n2 = 0.5 + 2.0 * std::sqrt(2.0) / (3.0 + 2.0 * std::sqrt(3.0));
  CHECK(pc_upper_bound(2, PcVariant::kAnchored) == doctest::Approx(expected_n2).epsilon(1e-14));
  CHECK(pc_upper_bound(2, PcVariant::kAnchored) == doctest::Approx(0.937559199).epsilon(1e-9));

  CHECK_THROWS_AS(pc_upper_bound(0), std::invalid_argument);
}

TEST_CASE("pc_upper_bound: anchored variant stays above the universal fidelity") {
  for (int n = 1; n <= 50; ++n)
    CHECK(pc_upper_bound(n, PcVariant::kAnchored) > universal_fidelity_formula(n));
}

TEST_CASE("pc_upper_bound: as-printed variant contradicts the ordering at small N") {
  // The as-printed formula falls below the universal value for N <= 4 and
  // crosses above it at N = 5.
  for (int n = 1; n <= 4; ++n)
    CHECK(pc_upper_bound(n, PcVariant::kAsPrinted) < universal_fidelity_formula(n));
  CHECK(pc_upper_bound(5, PcVariant::kAsPrinted) > universal_fidelity_formula(5));
  // In particular it sits below the anchored variant's own N = 1 anchor.
  CHECK(pc_upper_bound(1, PcVariant::kAsPrinted) < 5.0 / 6.0);
}

TEST_CASE("measured_clone_fidelity: argument validation") {
  const Ket zero = Ket::basis(2, 0);
  const CloneOutput out = universal_clone(zero.projector(), 1, 2);
  CHECK_THROWS_AS(measured_clone_fidelity(out, zero, 2), std::invalid_argument);
  CHECK_THROWS_AS(measured_clone_fidelity(out, zero, -1), std::invalid_argument);
  CHECK_THROWS_AS(measured_clone_fidelity(out, Ket::basis(4, 0), 0), std::invalid_argument);
}

TEST_CASE("figure2_table: rows and bounds") {
  const std::vector<Fig2Row> rows = figure2_table(20, PcVariant::kAnchored);
  REQUIRE(rows.size() == 20);
  CHECK(rows[0].n == 1);
  CHECK(rows[0].f_universal == doctest::Approx(0.833333333).epsilon(1e-9));
  CHECK(rows[0].f_pc_bound == doctest::Approx(0.853553391).epsilon(1e-9));
  CHECK(rows[1].f_pc_bound == doctest::Approx(0.937559199).epsilon(1e-9));
  CHECK(rows[19].f_universal == doctest::Approx(1.0 - 1.0 / 462.0).epsilon(1e-12));
  for (const Fig2Row& row : rows) CHECK(row.f_pc_bound > row.f_universal);

  CHECK_THROWS_AS(figure2_table(0), std::invalid_argument);
  CHECK_THROWS_AS(figure2_table(51), std::invalid_argument);
}
