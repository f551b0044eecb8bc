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

// Simulation and verification of pulse schedules in the rotating frame.
// Rotations are instantaneous; only Entangle ops consume time.

#include <string>

#include "qgd/equivalence.hpp"
#include "qgd/hamiltonian.hpp"
#include "qgd/schedule.hpp"

namespace qgd {

/// exp(-i angle sigma^axis / 2).
Mat2 rotation2(Axis axis, double angle);

/// rotation2 on `qubit` (1 or 2), identity on the other.
Mat4 rotation_matrix(Axis axis, double angle, int qubit);

/// Unitary of a single op under rotating-frame couplings `p`.
Mat4 op_matrix(const PulseOp &op, const RotFrameParams &p);

/// Ordered product of the schedule's ops; the first op acts first.
Mat4 simulate_schedule(const PulseSchedule &s, const RotFrameParams &p);

enum class VerifyMode { Exact, ExactUpToPhase, LocalClass };

std::string_view to_string(VerifyMode mode);
VerifyMode verify_mode_from_string(std::string_view name);

struct VerificationReport {
  std::string target;
  VerifyMode mode = VerifyMode::Exact;
  double tolerance = 1e-9;
  double distance = 0.0;
  double distance_up_to_phase = 0.0;
  double invariant_distance = 0.0;
  bool pass_exact = false;
  bool pass_up_to_phase = false;
  bool pass_class = false;
  double entangling_time = 0.0;

  /// Pass flag of the selected mode.
  bool passed() const;
};

/// Simulates `s` and compares it against `target` with every metric. An
/// exact (or phase-exact) match also counts as a class match.
VerificationReport verify_schedule(const PulseSchedule &s, const RotFrameParams &p,
                                   const Mat4 &target, VerifyMode mode,
                                   std::string target_name = "target",
                                   double tol = 1e-9);

/// The sign conventions every compiled schedule relies on: i Rx(pi) Ry(pi/2)
/// is the Hadamard gate, and Rx(pi) on qubit 1 conjugates the coupling to
/// J (XX - YY) - J_zz ZZ. Throws std::logic_error if either fails to 1e-12.
void check_conventions();

}  // namespace qgd
