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

#pragma once

// Canonical entanglers A(x, y, z) = exp(-i (x XX + y YY + z ZZ)) and
// trajectories through the space of their coordinates.

#include <string>
#include <vector>

#include "qgd/hamiltonian.hpp"
#include "qgd/qmat.hpp"
#include "qgd/schedule.hpp"

namespace qgd {

/// Wraps an angle into (-pi, pi].
double wrap_angle(double angle);

struct EntanglerCoords {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  /// Representative in the principal cell (-pi, pi]^3. A has period 2 pi in
  /// every coordinate, so this does not change A(c).
  EntanglerCoords wrapped() const { return {wrap_angle(x), wrap_angle(y), wrap_angle(z)}; }

  EntanglerCoords operator+(const EntanglerCoords &o) const {
    return {x + o.x, y + o.y, z + o.z};
  }
  EntanglerCoords operator*(double s) const { return {x * s, y * s, z * s}; }

  /// Largest per-axis difference.
  double max_abs_diff(const EntanglerCoords &o) const;
};

Mat4 canonical_entangler(const EntanglerCoords &c);

/// A function of time on a caller-chosen grid.
struct SampledProfile {
  std::vector<double> times;
  std::vector<double> values;

  /// Throws Error{InvalidArgument} on mismatched sizes, an empty grid or
  /// decreasing times.
  void validate() const;
  /// Trapezoidal integral over the grid.
  double integral() const;
};

/// (int J dt, int J dt, int J_zz dt), wrapped into the principal cell. Only
/// meaningful when J' = 0, where the accumulated evolution is exactly A of
/// these coordinates.
EntanglerCoords coords_from_area(const SampledProfile &j, const SampledProfile &jzz);

struct TrajectorySample {
  double t = 0.0;
  /// Continuous, unwrapped coordinates.
  EntanglerCoords raw;
  EntanglerCoords wrapped;
};

using Trajectory = std::vector<TrajectorySample>;

/// Entangler-space path of a schedule of entangling intervals and refocusing
/// pi rotations, for J' = 0.
///
/// Each interval advances the coordinates at rates (s_x J, s_y J, s_z J_zz).
/// A pi rotation about x on either qubit flips (s_y, s_z); about y flips
/// (s_x, s_z); about z flips (s_x, s_y). Even multiples of pi and global
/// phases leave the path unchanged. Any other rotation angle throws
/// Error{UnsupportedOp}; a nonzero J' throws Error{NonzeroJPrime}.
///
/// With `samples` == 0 the path is sampled at interval boundaries; otherwise
/// at `samples` uniformly spaced times spanning the total entangling time.
Trajectory trajectory(const RotFrameParams &p, const PulseSchedule &schedule,
                      std::size_t samples = 0);

/// CSV with header t,x,y,z,x_wrapped,y_wrapped,z_wrapped and 12 significant
/// digits per value.
std::string trajectory_csv(const Trajectory &traj);

}  // namespace qgd
