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
#include <numbers>

#include "clonesim/states.hpp"

using namespace clonesim;

namespace {
constexpr double kPi = std::numbers::pi;

cplx inner(const Ket& a, const Ket& b) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}
}  // namespace

TEST_CASE("real_ket: named angles") {
  const Ket zero = real_ket(RealQubitState(0.0));
  CHECK(std::abs(zero[0] - cplx{1.0, 0.0}) < 1e-15);
  CHECK(std::abs(zero[1]) < 1e-15);

  const Ket one = real_ket(RealQubitState(kPi));
  CHECK(std::abs(one[0]) < 1e-15);
  CHECK(std::abs(one[1] - cplx{1.0, 0.0}) < 1e-15);

  const Ket plus = real_ket(RealQubitState(kPi / 2.0));
  CHECK(plus[0].real() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  CHECK(plus[1].real() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
}

TEST_CASE("RealQubitState: angle normalization into [0, 2pi)") {
  CHECK(RealQubitState(-kPi / 2.0).alpha() == doctest::Approx(1.5 * kPi).epsilon(1e-12));
  CHECK(RealQubitState(5.0 * kPi).alpha() == doctest::Approx(kPi).epsilon(1e-12));
  CHECK(RealQubitState(2.0 * kPi).alpha() == doctest::Approx(0.0));
}

TEST_CASE("real_ket: real amplitudes on the main circle (1000-point grid)") {
  for (int i = 0; i < 1000; ++i) {
    const double alpha = 2.0 * kPi * double(i) / 1000.0;
    const Ket psi = real_ket(RealQubitState(alpha));
    CHECK(psi[0].imag() == 0.0);
    CHECK(psi[1].imag() == 0.0);
    CHECK(std::abs(bloch_vector(psi.projector()).y) < 1e-12);
  }
}

TEST_CASE("pseudo_pure_density: endpoints and a worked matrix") {
  const Ket zero = Ket::basis(2, 0);
  CHECK(max_abs_diff(pseudo_pure_density(PseudoPureState(1.0, zero, 1)), zero.projector()) <
        1e-15);

  ComplexMatrix half = ComplexMatrix::identity(2);
  half *= cplx{0.5, 0.0};
  CHECK(max_abs_diff(pseudo_pure_density(PseudoPureState(0.0, zero, 1)), half) < 1e-15);

  // eps = 1/2 around |+>: [[0.5, 0.25], [0.25, 0.5]]
  const Ket plus = real_ket(RealQubitState(kPi / 2.0));
  const ComplexMatrix rho = pseudo_pure_density(PseudoPureState(0.5, plus, 1));
  CHECK(rho(0, 0).real() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rho(0, 1).real() == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(rho(1, 0).real() == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(rho(1, 1).real() == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("pseudo_pure_density: trace one and PSD over an epsilon grid") {
  const Ket plus = real_ket(RealQubitState(kPi / 2.0));
  for (int i = 0; i <= 100; ++i) {
    const double eps = double(i) / 100.0;
    const ComplexMatrix rho = pseudo_pure_density(PseudoPureState(eps, plus, 1));
    CHECK(std::abs(rho.trace() - cplx{1.0, 0.0}) < 1e-12);
    CHECK(min_eigenvalue(rho) >= -1e-12);
  }
}

TEST_CASE("pseudo_pure_density: single-qubit purity closed form (1 + eps^2)/2") {
  const Ket psi = real_ket(RealQubitState(0.3));
  for (int i = 0; i <= 20; ++i) {
    const double eps = double(i) / 20.0;
    const double measured = purity(pseudo_pure_density(PseudoPureState(eps, psi, 1)));
    CHECK(measured == doctest::Approx(0.5 * (1.0 + eps * eps)).epsilon(1e-12));
  }
}

TEST_CASE("pseudo_pure_density: two-qubit normalization") {
  const Ket bell({cplx{1.0, 0.0}, cplx{0.0, 0.0}, cplx{0.0, 0.0}, cplx{1.0, 0.0}});
  const ComplexMatrix rho = pseudo_pure_density(PseudoPureState(0.3, bell, 2));
  CHECK(std::abs(rho.trace() - cplx{1.0, 0.0}) < 1e-12);
  CHECK(rho(1, 1).real() == doctest::Approx(0.7 / 4.0).epsilon(1e-12));
}

TEST_CASE("bloch_vector: poles, center, and dimension error") {
  const BlochVector north = bloch_vector(Ket::basis(2, 0).projector());
  CHECK(north.x == doctest::Approx(0.0));
  CHECK(north.y == doctest::Approx(0.0));
  CHECK(north.z == doctest::Approx(1.0));

  ComplexMatrix half = ComplexMatrix::identity(2);
  half *= cplx{0.5, 0.0};
  const BlochVector center = bloch_vector(half);
  CHECK(std::abs(center.x) + std::abs(center.y) + std::abs(center.z) < 1e-15);

  CHECK_THROWS_AS(bloch_vector(ComplexMatrix::identity(4)), std::invalid_argument);
}

TEST_CASE("orthogonal_real: inner product vanishes and double application returns") {
  CHECK(orthogonal_real(RealQubitState(0.0)).alpha() == doctest::Approx(kPi).epsilon(1e-12));
  CHECK(orthogonal_real(RealQubitState(kPi / 2.0)).alpha() ==
        doctest::Approx(1.5 * kPi).epsilon(1e-12));

  for (int i = 0; i < 32; ++i) {
    const RealQubitState s(2.0 * kPi * double(i) / 32.0);
    const RealQubitState perp = orthogonal_real(s);
    CHECK(std::abs(inner(real_ket(s), real_ket(perp))) < 1e-12);
    CHECK(orthogonal_real(perp).alpha() == doctest::Approx(s.alpha()).epsilon(1e-12));
  }
}

TEST_CASE("main_circle_angle: round trip and degenerate input") {
  for (int i = 0; i < 16; ++i) {
    const double alpha = 2.0 * kPi * double(i) / 16.0;
    const ComplexMatrix rho = real_ket(RealQubitState(alpha)).projector();
    CHECK(main_circle_angle(rho) == doctest::Approx(alpha).epsilon(1e-9));
  }
  ComplexMatrix half = ComplexMatrix::identity(2);
  half *= cplx{0.5, 0.0};
  CHECK(main_circle_angle(half) == 0.0);
}

TEST_CASE("PseudoPureState: validation") {
  const Ket zero = Ket::basis(2, 0);
  CHECK_THROWS_AS(PseudoPureState(1.5, zero, 1), std::invalid_argument);
  CHECK_THROWS_AS(PseudoPureState(-0.1, zero, 1), std::invalid_argument);
  CHECK_THROWS_AS(PseudoPureState(0.5, zero, 2), std::invalid_argument);
}
