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
#include "qgd/random.hpp"

using namespace qgd;
using oracle::max_abs;

namespace {

CouplingTensor random_tensor(Rng &rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  CouplingTensor ct;
  for (auto &row : ct.entries)
    for (double &v : row) v = n(rng);
  return ct;
}

Mat4 swap_gate() {
  Mat4 s = Mat4::Zero();
  s(0, 0) = s(1, 2) = s(2, 1) = s(3, 3) = 1.0;
  return s;
}

}  // namespace

TEST_CASE("reduce_coupling keeps the excitation-conserving combinations") {
  const double g = 0.7;
  auto heis = reduce_coupling(CouplingTensor::heisenberg(g));
  CHECK(heis.J == g);
  CHECK(heis.Jzz == g);
  CHECK(heis.Jprime == 0.0);

  auto ising = reduce_coupling(CouplingTensor::ising(g));
  CHECK(ising.J == 0.0);
  CHECK(ising.Jzz == g);
  CHECK(ising.Jprime == 0.0);

  CouplingTensor anti;
  anti(Axis::X, Axis::Y) = g;
  anti(Axis::Y, Axis::X) = -g;
  auto dm = reduce_coupling(anti);
  CHECK(dm.J == 0.0);
  CHECK(dm.Jzz == 0.0);
  CHECK(dm.Jprime == g);
  CHECK(rwa_discarded_weight(anti) == 0.0);

  // XX-only coupling: half survives as J, half is discarded.
  CHECK(rwa_discarded_weight(CouplingTensor::diagonal(1.0, 0.0, 0.0)) == 0.25);
}

TEST_CASE("reduce_coupling is linear") {
  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const CouplingTensor a = random_tensor(rng), b = random_tensor(rng);
    CouplingTensor mix;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) mix.entries[i][j] = 2.0 * a.entries[i][j] - 0.5 * b.entries[i][j];
    const auto ra = reduce_coupling(a), rb = reduce_coupling(b), rm = reduce_coupling(mix);
    CHECK(rm.J == doctest::Approx(2.0 * ra.J - 0.5 * rb.J));
    CHECK(rm.Jzz == doctest::Approx(2.0 * ra.Jzz - 0.5 * rb.Jzz));
    CHECK(rm.Jprime == doctest::Approx(2.0 * ra.Jprime - 0.5 * rb.Jprime));
  }
}

TEST_CASE("derived gamma and phi") {
  const RotFrameParams p{0.3, 0.1, -0.4};
  CHECK(p.gamma() == Complex(0.6, -0.8));
  CHECK(std::norm(p.gamma()) == doctest::Approx(4.0 * (0.09 + 0.16)).epsilon(1e-12));
  CHECK(p.phi() == doctest::Approx(std::atan2(-0.4, 0.3)));
  CHECK(RotFrameParams{-1.0, 0.0, 0.0}.phi() == doctest::Approx(kPi));
  CHECK(RotFrameParams{-1.0, 0.0, -0.0}.phi() == doctest::Approx(kPi));
  CHECK(RotFrameParams{0.0, 1.0, 0.0}.phi() == 0.0);
}

TEST_CASE("rot_frame_matrix matches the printed layout") {
  const double g = 0.9;
  const Mat4 xy = rot_frame_matrix({g, 0.0, 0.0});
  CHECK(xy(1, 2) == Complex(2.0 * g, 0.0));
  CHECK(xy(2, 1) == Complex(2.0 * g, 0.0));
  CHECK(max_abs(xy - xy.transpose()) == 0.0);

  Mat4 ising = Mat4::Zero();
  ising.diagonal() << g, -g, -g, g;
  CHECK(max_abs(rot_frame_matrix({0.0, g, 0.0}) - ising) == 0.0);
}

TEST_CASE("matrix and Pauli-operator forms agree") {
  Rng rng(22);
  std::normal_distribution<double> n(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const RotFrameParams p{n(rng), n(rng), n(rng)};
    CHECK(max_abs(rot_frame_matrix(p) - rot_frame_operator(p)) < 1e-14);
  }
}

TEST_CASE("rotating-frame spectrum is {Jzz, Jzz, -Jzz + |gamma|, -Jzz - |gamma|}") {
  Rng rng(23);
  std::normal_distribution<double> n(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const RotFrameParams p{n(rng), n(rng), n(rng)};
    Eigen::SelfAdjointEigenSolver<Mat4> solver(rot_frame_matrix(p));
    std::vector<double> expected{p.Jzz, p.Jzz, -p.Jzz + p.gamma_abs(), -p.Jzz - p.gamma_abs()};
    std::sort(expected.begin(), expected.end());
    for (int k = 0; k < 4; ++k) CHECK(solver.eigenvalues()(k) == doctest::Approx(expected[k]));
  }
}

TEST_CASE("exchange symmetry holds only without J'") {
  const Mat4 swap = swap_gate();
  const Mat4 sym = rot_frame_matrix({0.4, -0.2, 0.0});
  CHECK(max_abs(swap * sym - sym * swap) < 1e-15);
  const Mat4 asym = rot_frame_matrix({0.4, -0.2, 0.3});
  CHECK(max_abs(swap * asym - asym * swap) > 0.1);
}

TEST_CASE("lab-frame generator") {
  const double eps1 = 5.0, eps2 = 7.0;
  const QubitParams qp{eps1, eps2, 0.3, 0.2, 0.1, -0.4};
  const Generator bare = lab_frame_generator(CouplingTensor{}, qp, false);
  Mat4 expected = Mat4::Zero();
  expected.diagonal() << -(eps1 + eps2) / 2, -(eps1 - eps2) / 2, (eps1 - eps2) / 2,
      (eps1 + eps2) / 2;
  CHECK(max_abs(bare(0.7) - expected) < 1e-15);

  const Generator tuned =
      lab_frame_generator(CouplingTensor::ising(0.1), QubitParams::tuned(3.0), false);
  Eigen::SelfAdjointEigenSolver<Mat4> s0(tuned(0.0)), s1(tuned(2.3));
  CHECK((s0.eigenvalues() - s1.eigenvalues()).cwiseAbs().maxCoeff() < 1e-14);

  Rng rng(24);
  const CouplingTensor ct = random_tensor(rng);
  const Generator driven = lab_frame_generator(ct, qp, true);
  for (double t : {0.0, 0.3, 1.7, 12.0}) CHECK(is_hermitian(driven(t)));
  // The drive enters as Omega_1 cos(eps_1 t + phi_1) X_1.
  const Mat4 diff = driven(0.0) - lab_frame_generator(ct, qp, false)(0.0);
  CHECK(diff(0, 2).real() == doctest::Approx(0.3 * std::cos(0.1)).epsilon(1e-12));

  CHECK_THROWS_AS(lab_frame_generator(CouplingTensor{}, QubitParams{-1.0, 1.0}, false), Error);
}

namespace {

// Independent evaluation: Taylor-series exponentials of the constant lab
// and rotating-frame generators, assembled from the raw tensor entries.
double oracle_rwa(const CouplingTensor &ct, double eps, double T) {
  const Mat2 id = Mat2::Identity();
  const Mat4 h0 = -0.5 * eps * (kron(pauli::z(), id) + kron(id, pauli::z()));
  Mat4 coupling = Mat4::Zero();
  const Mat2 paulis[3] = {pauli::x(), pauli::y(), pauli::z()};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) coupling += ct.entries[a][b] * kron(paulis[a], paulis[b]);
  const double J = 0.5 * (ct.entries[0][0] + ct.entries[1][1]);
  const double Jp = 0.5 * (ct.entries[0][1] - ct.entries[1][0]);
  const Mat4 rot = J * (kron(paulis[0], paulis[0]) + kron(paulis[1], paulis[1])) +
                   ct.entries[2][2] * kron(paulis[2], paulis[2]) +
                   Jp * (kron(paulis[0], paulis[1]) - kron(paulis[1], paulis[0]));
  const Complex i(0.0, 1.0);
  const Mat4 u = oracle::expm_taylor(i * T * h0) * oracle::expm_taylor(-i * T * (h0 + coupling));
  const Mat4 v = oracle::expm_taylor(-i * T * rot);
  const Complex overlap = (v.adjoint() * u).trace();
  return (u - overlap / std::abs(overlap) * v).norm();
}

}  // namespace

TEST_CASE("rwa_infidelity vanishes without coupling") {
  CHECK(rwa_infidelity(CouplingTensor{}, 10.0, 1.3) < 1e-12);
}

TEST_CASE("rwa_infidelity for Heisenberg coupling at g/eps = 1e-3") {
  const double g = 1.0;
  const double value = rwa_infidelity(CouplingTensor::heisenberg(g), 1000.0 * g, kPi / (8.0 * g));
  // Isotropic exchange commutes with the drift; only rounding remains.
  CHECK(value < 1e-2);
  CHECK(value < 1e-9);
}

TEST_CASE("rwa_infidelity matches the oracle and falls with g/eps") {
  const double g = 1.0, T = kPi / (8.0 * g);
  // Frozen from an independent dense matrix-exponential evaluation.
  const double baseline[3] = {0.10433271114177206, 0.014411622261937911, 0.00027768011381551976};
  const double ratios[3] = {1e-1, 1e-2, 1e-3};
  const CouplingTensor xx = CouplingTensor::diagonal(g, 0.0, 0.0);
  double previous = 10.0;
  for (int k = 0; k < 3; ++k) {
    const double value = rwa_infidelity(xx, g / ratios[k], T);
    CHECK(value == doctest::Approx(baseline[k]).epsilon(1e-6));
    CHECK(value == doctest::Approx(oracle_rwa(xx, g / ratios[k], T)).epsilon(1e-7));
    CHECK(value < previous);
    previous = value;
  }
  Rng rng(25);
  const CouplingTensor generic = random_tensor(rng);
  CHECK(rwa_infidelity(generic, 40.0, 0.5) ==
        doctest::Approx(oracle_rwa(generic, 40.0, 0.5)).epsilon(1e-7));
}

TEST_CASE("rwa_infidelity reports a failed convergence check") {
  RwaOptions strict;
  strict.convergence_tol = -1.0;
  try {
    rwa_infidelity(CouplingTensor::heisenberg(1.0), 10.0, 0.5, strict);
    FAIL("expected StepTooCoarse");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::StepTooCoarse);
  }
  CHECK_THROWS_AS(rwa_infidelity(CouplingTensor{}, -1.0, 1.0), Error);
}
