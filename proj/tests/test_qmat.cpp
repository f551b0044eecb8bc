// Copyright 2026 The qgd Authors
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

#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qgd/error.hpp"
#include "qgd/hamiltonian.hpp"
#include "qgd/qmat.hpp"
#include "qgd/random.hpp"

using namespace qgd;
using oracle::max_abs;

TEST_CASE("kron places qubit 1 on the left") {
  CHECK(max_abs(kron(pauli::identity(), pauli::identity()) - Mat4::Identity()) == 0.0);

  Mat4 zz = Mat4::Zero();
  zz.diagonal() << 1.0, -1.0, -1.0, 1.0;
  CHECK(max_abs(kron(pauli::z(), pauli::z()) - zz) == 0.0);

  Mat4 xx = Mat4::Zero();
  xx(0, 3) = xx(1, 2) = xx(2, 1) = xx(3, 0) = 1.0;
  CHECK(max_abs(kron(pauli::x(), pauli::x()) - xx) == 0.0);

  // Z on qubit 1 only: diag(1, 1, -1, -1).
  const Mat4 z1 = kron(pauli::z(), pauli::identity());
  CHECK(z1(1, 1).real() == 1.0);
  CHECK(z1(2, 2).real() == -1.0);
}

TEST_CASE("expm_hermitian of simple generators") {
  CHECK(max_abs(expm_hermitian(Mat4::Zero(), 3.7) - Mat4::Identity()) == 0.0);

  const Mat4 z1 = kron(pauli::z(), pauli::identity());
  // Entrywise e^{-i pi lambda} with lambda = +-1.
  CHECK(max_abs(expm_hermitian(z1, kPi) + Mat4::Identity()) < 1e-15);

  Mat4 quarter = Mat4::Zero();
  quarter.diagonal() << Complex(0, -1), Complex(0, -1), Complex(0, 1), Complex(0, 1);
  CHECK(max_abs(expm_hermitian(z1, kPi / 2.0) - quarter) < 1e-15);
}

TEST_CASE("expm_hermitian rejects non-Hermitian generators") {
  Mat4 h = Mat4::Zero();
  h(0, 1) = 1.0;
  try {
    expm_hermitian(h, 1.0);
    FAIL("expected NonHermitianInput");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::NonHermitianInput);
  }
}

TEST_CASE("expm_hermitian agrees with a Taylor-series oracle and is unitary") {
  Rng rng(11);
  std::uniform_real_distribution<double> time(-5.0, 5.0);
  for (int trial = 0; trial < 200; ++trial) {
    const Mat4 h = random_hermitian(rng, 2.0);
    const double t = time(rng);
    const Mat4 u = expm_hermitian(h, t);
    CHECK(unitarity_defect(u) < 1e-12);
    CHECK(max_abs(u - oracle::expm_taylor(Complex(0.0, -t) * h)) < 1e-11);
  }
}

TEST_CASE("expm_hermitian stays unitary up to |h t| = 100 and obeys the semigroup law") {
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    Mat4 h = random_hermitian(rng);
    h *= 100.0 / spectral_norm(h);
    CHECK(unitarity_defect(expm_hermitian(h, 1.0)) < 1e-12);
    const Mat4 a = expm_hermitian(h, 0.3) * expm_hermitian(h, 0.45);
    CHECK(max_abs(a - expm_hermitian(h, 0.75)) < 1e-11);
  }
}

TEST_CASE("distance") {
  Rng rng(13);
  const Mat4 u = haar_unitary(rng);
  CHECK(distance(u, u, false) == 0.0);
  CHECK(distance(u, u, true) < 1e-14);
  CHECK(distance(u, std::polar(1.0, kPi / 7.0) * u, true) < 1e-14);
  CHECK(distance(u, std::polar(1.0, kPi / 7.0) * u, false) > 0.1);

  Mat4 cnot = Mat4::Zero();
  cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
  CHECK(distance(Mat4::Identity(), cnot, false) == doctest::Approx(2.0).epsilon(1e-15));

  // Agrees with the closed form sqrt(8 - 2 |tr(u^dag v)|) for unitaries.
  const Mat4 v = haar_unitary(rng);
  const double closed = std::sqrt(8.0 - 2.0 * std::abs((u.adjoint() * v).trace()));
  CHECK(distance(u, v, true) == doctest::Approx(closed).epsilon(1e-12));
}

TEST_CASE("distance is symmetric and satisfies the triangle inequality") {
  Rng rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    const Mat4 a = haar_unitary(rng), b = haar_unitary(rng), c = haar_unitary(rng);
    for (bool phase : {false, true}) {
      CHECK(std::abs(distance(a, b, phase) - distance(b, a, phase)) < 1e-12);
      CHECK(distance(a, c, phase) <= distance(a, b, phase) + distance(b, c, phase) + 1e-12);
    }
  }
}

TEST_CASE("propagate basics") {
  CHECK(max_abs(propagate(PiecewiseHamiltonian{}) - Mat4::Identity()) == 0.0);

  Rng rng(15);
  const Mat4 h = random_hermitian(rng);
  PiecewiseHamiltonian one;
  one.add(ConstantSegment{h, 0.8});
  CHECK(max_abs(propagate(one) - expm_hermitian(h, 0.8)) == 0.0);

  CHECK_THROWS_AS(one.add(ConstantSegment{h, -1.0}), Error);
}

TEST_CASE("later segments act on the left") {
  Rng rng(16);
  const Mat4 a = random_hermitian(rng), b = random_hermitian(rng);
  PiecewiseHamiltonian ph;
  ph.add(ConstantSegment{a, 0.4}).add(ConstantSegment{b, 0.9});
  CHECK(max_abs(propagate(ph) - expm_hermitian(b, 0.9) * expm_hermitian(a, 0.4)) < 1e-14);
}

TEST_CASE("commuting segments compose to the exponential of the summed generator") {
  Rng rng(17);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    PiecewiseHamiltonian forward, backward;
    Mat4 total = Mat4::Zero();
    std::vector<ConstantSegment> segs;
    // J' = 0 keeps the rotating-frame couplings mutually commuting.
    for (int k = 0; k < 5; ++k)
      segs.push_back({rot_frame_matrix({u(rng), u(rng), 0.0}), 0.5 + 0.5 * u(rng)});
    for (const auto &s : segs) {
      forward.add(s);
      total += s.duration * s.generator;
    }
    for (auto it = segs.rbegin(); it != segs.rend(); ++it) backward.add(*it);
    const Mat4 expected = expm_hermitian(total, 1.0);
    CHECK(max_abs(propagate(forward) - expected) < 1e-10);
    CHECK(max_abs(propagate(backward) - expected) < 1e-10);
  }
}

TEST_CASE("time-dependent J(t) depends only on the time integrals") {
  const double g = 1.0;
  const double T = kPi / (4.0 * g);
  const double zz = 0.37;
  // J(t) = 2 g sin^2(pi t / T) integrates to g T; J_zz(t) linear ramp to 2 zz.
  Generator smooth = [&](double t) {
    const double s = std::sin(kPi * t / T);
    return rot_frame_matrix({2.0 * g * s * s, 2.0 * zz * t / T, 0.0});
  };
  PiecewiseHamiltonian ph;
  ph.add(SampledSegment{smooth, T, 0.0});
  const Mat4 constant = expm_hermitian(rot_frame_matrix({g, zz, 0.0}), T);
  CHECK(max_abs(propagate(ph) - constant) < 1e-10);
}

namespace {

Generator noncommuting() {
  return [](double t) {
    return std::cos(t) * pauli_pair(Axis::X, Axis::Z) +
           std::sin(2.0 * t) * kron(pauli::y(), pauli::identity()) +
           0.5 * pauli_pair(Axis::Z, Axis::Z);
  };
}

Mat4 run(StepScheme scheme, double step) {
  PiecewiseHamiltonian ph;
  ph.add(SampledSegment{noncommuting(), 2.0, step});
  PropagateOptions opts;
  opts.scheme = scheme;
  return propagate(ph, opts);
}

}  // namespace

TEST_CASE("sampled propagation converges as the step shrinks") {
  const Mat4 reference = run(StepScheme::Magnus4, 2e-4);
  for (StepScheme scheme : {StepScheme::Midpoint, StepScheme::Magnus4}) {
    const double coarse = distance(run(scheme, 0.02), reference, false);
    const double fine = distance(run(scheme, 0.01), reference, false);
    CHECK(fine < coarse);
  }
  // Midpoint is second order, Magnus4 fourth order.
  const double m1 = distance(run(StepScheme::Midpoint, 0.02), reference, false);
  const double m2 = distance(run(StepScheme::Midpoint, 0.01), reference, false);
  CHECK(m1 / m2 == doctest::Approx(4.0).epsilon(0.05));
  const double g1 = distance(run(StepScheme::Magnus4, 0.04), reference, false);
  const double g2 = distance(run(StepScheme::Magnus4, 0.02), reference, false);
  CHECK(g1 / g2 == doctest::Approx(16.0).epsilon(0.1));
}

TEST_CASE("halving the default step changes the propagator by less than 1e-10") {
  PiecewiseHamiltonian ph;
  ph.add(SampledSegment{noncommuting(), 2.0, 0.0});
  const Mat4 at_default = propagate(ph);
  PropagateOptions halved;
  halved.norm_step = PropagateOptions{}.norm_step / 2;
  CHECK(distance(at_default, propagate(ph, halved), false) < 1e-10);
}
