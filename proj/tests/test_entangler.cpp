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
#include <sstream>

#include "oracles.hpp"
#include "qgd/compiler.hpp"
#include "qgd/entangler.hpp"
#include "qgd/equivalence.hpp"
#include "qgd/error.hpp"
#include "qgd/pulses.hpp"

using namespace qgd;
using oracle::max_abs;

TEST_CASE("wrap_angle maps into (-pi, pi]") {
  CHECK(wrap_angle(0.0) == 0.0);
  CHECK(wrap_angle(kPi) == doctest::Approx(kPi));
  CHECK(wrap_angle(-kPi) == doctest::Approx(kPi));
  CHECK(wrap_angle(3.0 * kPi / 2.0) == doctest::Approx(-kPi / 2.0));
  CHECK(wrap_angle(-7.0) == doctest::Approx(-7.0 + 2.0 * kPi));
}

TEST_CASE("canonical entangler special points") {
  CHECK(max_abs(canonical_entangler({}) - Mat4::Identity()) == 0.0);

  Mat4 expected = Mat4::Zero();
  const Complex minus = std::polar(1.0, -kPi / 4.0), plus = std::polar(1.0, kPi / 4.0);
  expected.diagonal() << minus, plus, plus, minus;
  CHECK(max_abs(canonical_entangler({0.0, 0.0, kPi / 4.0}) - expected) < 1e-15);

  CHECK(locally_equivalent(canonical_entangler({kPi / 4.0, kPi / 4.0, kPi / 4.0}),
                           named_gate("SWAP")));
}

TEST_CASE("canonical entangler is 2 pi periodic and factorizes in any order") {
  Rng rng(31);
  std::uniform_real_distribution<double> angle(-4.0, 4.0);
  for (int trial = 0; trial < 200; ++trial) {
    const EntanglerCoords c{angle(rng), angle(rng), angle(rng)};
    const Mat4 a = canonical_entangler(c);
    CHECK(unitarity_defect(a) < 1e-14);
    const double tau = 2.0 * kPi;
    CHECK(distance(a, canonical_entangler({c.x + tau, c.y, c.z}), false) < 1e-12);
    CHECK(distance(a, canonical_entangler({c.x, c.y + tau, c.z}), false) < 1e-12);
    CHECK(distance(a, canonical_entangler({c.x, c.y, c.z + tau}), false) < 1e-12);
    CHECK(distance(a, canonical_entangler(c.wrapped()), false) < 1e-12);

    const Mat4 ax = canonical_entangler({c.x, 0, 0});
    const Mat4 ay = canonical_entangler({0, c.y, 0});
    const Mat4 az = canonical_entangler({0, 0, c.z});
    CHECK(max_abs(a - ax * ay * az) < 1e-12);
    CHECK(max_abs(a - az * ax * ay) < 1e-12);
    CHECK(max_abs(a - ay * az * ax) < 1e-12);
  }
}

TEST_CASE("canonical entangler equals evolution under J' = 0 couplings") {
  Rng rng(32);
  std::normal_distribution<double> n(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const RotFrameParams p{n(rng), n(rng), 0.0};
    const double t = std::abs(n(rng)) * 2.0;
    PiecewiseHamiltonian ph;
    ph.add(ConstantSegment{rot_frame_matrix(p), t});
    CHECK(distance(propagate(ph), canonical_entangler({p.J * t, p.J * t, p.Jzz * t}), false) <
          1e-10);
  }
}

TEST_CASE("coords_from_area integrates the profiles") {
  const double g = 1.3, T = kPi / (4.0 * g);
  const SampledProfile j{{0.0, T}, {g, g}};
  const SampledProfile none{{0.0, T}, {0.0, 0.0}};
  CHECK(coords_from_area(j, none).max_abs_diff({kPi / 4.0, kPi / 4.0, 0.0}) < 1e-15);
  CHECK(coords_from_area(none, j).max_abs_diff({0.0, 0.0, kPi / 4.0}) < 1e-15);

  // Triangle with the same area as the constant profile.
  const SampledProfile tri{{0.0, T / 2.0, T}, {0.0, 2.0 * g, 0.0}};
  CHECK(coords_from_area(tri, tri).max_abs_diff(coords_from_area(j, j)) < 1e-15);

  // Areas beyond pi are wrapped.
  const SampledProfile big{{0.0, 1.0}, {5.0, 5.0}};
  CHECK(coords_from_area(big, none).x == doctest::Approx(5.0 - 2.0 * kPi));

  CHECK_THROWS_AS(coords_from_area(SampledProfile{{0.0, 1.0}, {1.0}}, none), Error);
  CHECK_THROWS_AS(coords_from_area(SampledProfile{{1.0, 0.0}, {1.0, 1.0}}, none), Error);
}

TEST_CASE("trajectory without refocusing stays in the x = y plane") {
  const double g = 0.8, T = 0.6;
  PulseSchedule s;
  s.entangle(T);
  const auto traj = trajectory({g, g, 0.0}, s, 7);
  REQUIRE(traj.size() == 7);
  CHECK(traj.front().t == 0.0);
  CHECK(traj.front().raw.max_abs_diff({}) == 0.0);
  for (std::size_t k = 1; k < traj.size(); ++k) {
    CHECK(traj[k].t > traj[k - 1].t);
    CHECK(traj[k].raw.x == traj[k].raw.y);
    CHECK(traj[k].raw.x == doctest::Approx(g * traj[k].t));
  }
  CHECK(traj.back().raw.max_abs_diff({g * T, g * T, g * T}) < 1e-15);
}

TEST_CASE("two refocused intervals reach (pi/4, 0, 0) for any J_zz") {
  const double g = 1.1;
  const double dt = kPi / (8.0 * g);
  for (double zz : {0.0, 0.4, -2.3}) {
    PulseSchedule s;
    s.entangle(dt).rotate(Axis::X, kPi, 1).entangle(dt);
    const auto traj = trajectory({g, zz, 0.0}, s);
    REQUIRE(traj.size() == 3);
    CHECK(traj[1].raw.max_abs_diff({kPi / 8.0, kPi / 8.0, zz * dt}) < 1e-15);
    CHECK(traj[2].raw.max_abs_diff({kPi / 4.0, 0.0, 0.0}) < 1e-15);
  }
  // Ry(pi) reflects toward the y axis instead.
  PulseSchedule y;
  y.entangle(dt).rotate(Axis::Y, kPi, 2).entangle(dt);
  CHECK(trajectory({g, 0.3, 0.0}, y).back().raw.max_abs_diff({0.0, kPi / 4.0, 0.0}) < 1e-15);
}

TEST_CASE("trajectory edge cases") {
  const auto empty = trajectory({1.0, 1.0, 0.0}, PulseSchedule{}, 10);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].t == 0.0);

  PulseSchedule s;
  s.entangle(0.1);
  CHECK_THROWS_AS(trajectory({1.0, 0.0, 0.2}, s), Error);
  try {
    trajectory({1.0, 0.0, 0.2}, s);
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::NonzeroJPrime);
  }

  PulseSchedule bad;
  bad.entangle(0.1).rotate(Axis::X, kPi / 2.0, 1);
  try {
    trajectory({1.0, 0.0, 0.0}, bad);
    FAIL("expected UnsupportedOp");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::UnsupportedOp);
  }

  // Full turns and phases leave the path alone.
  PulseSchedule harmless;
  harmless.entangle(0.1).rotate(Axis::Z, 2.0 * kPi, 2).phase(0.3).entangle(0.1);
  CHECK(trajectory({1.0, 0.5, 0.0}, harmless).back().raw.max_abs_diff({0.2, 0.2, 0.1}) < 1e-15);
}

TEST_CASE("trajectory endpoints match the simulated schedule up to local rotations") {
  Rng rng(33);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> pick(0, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const RotFrameParams p{u(rng), u(rng), 0.0};
    PulseSchedule s;
    for (int k = 0; k < 6; ++k) {
      s.entangle(std::abs(u(rng)));
      const int choice = pick(rng);
      if (choice < 3) s.rotate(static_cast<Axis>(choice), kPi, 1 + choice % 2);
    }
    const auto traj = trajectory(p, s);
    const Mat4 a = canonical_entangler(traj.back().wrapped);
    CHECK(invariant_distance(makhlin_invariants(a), makhlin_invariants(simulate_schedule(s, p))) <
          1e-9);
  }
}

TEST_CASE("trajectory CSV layout") {
  PulseSchedule s;
  s.entangle(kPi);
  const std::string csv = trajectory_csv(trajectory({1.0, 0.0, 0.0}, s, 2));
  std::istringstream in(csv);
  std::string header, first, second;
  std::getline(in, header);
  std::getline(in, first);
  std::getline(in, second);
  CHECK(header == "t,x,y,z,x_wrapped,y_wrapped,z_wrapped");
  CHECK(first == "0,0,0,0,0,0,0");
  CHECK(second ==
        "3.14159265359,3.14159265359,3.14159265359,0,3.14159265359,3.14159265359,0");
}
