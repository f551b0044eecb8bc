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

// CNOT synthesis from the rotating-frame couplings (J, J_zz, J').
//
//  * J = J' = 0:            one Ising interval of pi / (4 |J_zz|).
//  * J' = 0, J_zz = 0:      optionally one XY interval of pi / (4 |J|),
//                           giving SWAP * CNOT instead of CNOT.
//  * J' = 0, J != 0:        two intervals of pi / (8 |J|) around a refocusing
//                           Rx(pi); J_zz cancels.
//  * J' != 0:               the same two-interval construction conjugated by
//                           Rz(phi) on qubit 2, phi = arg(J + i J'), with
//                           intervals of pi / (8 sqrt(J^2 + J'^2)).
//
// Every result is re-simulated and checked against its target matrix,
// global phase included.

#include <string>
#include <string_view>

#include "qgd/hamiltonian.hpp"
#include "qgd/pulses.hpp"
#include "qgd/schedule.hpp"

namespace qgd {

enum class Branch { IsingSingleShot, XySingleShotSwapCnot, TwoShotRefocus, GeneralJPrime };
enum class Prefer { Auto, Cnot, SwapCnot };

std::string_view to_string(Branch branch);
std::string_view to_string(Prefer prefer);
Prefer prefer_from_string(std::string_view name);

struct CompileOptions {
  /// Auto selects SWAP * CNOT when J_zz = J' = 0, CNOT otherwise.
  Prefer prefer = Prefer::Auto;
  /// Qubit receiving the refocusing pi pulses.
  int refocus_qubit = 1;
  /// Use the general construction even when J' = 0.
  bool force_general = false;
  double tol = 1e-9;
};

struct CompileResult {
  PulseSchedule schedule;
  Branch branch = Branch::TwoShotRefocus;
  RotFrameParams params;
  std::string target;
  Mat4 target_matrix;
  /// Duration of each entangling interval.
  double delta_t = 0.0;
  VerificationReport verification;
};

/// Throws Error{ZeroCoupling} when J = J_zz = J' = 0, and
/// Error{InvalidArgument} when the requested construction does not apply to
/// the couplings (SWAP * CNOT needs J_zz = J' = 0 and J != 0; the general
/// construction excludes the pure Ising case).
CompileResult compile_cnot(const RotFrameParams &p, const CompileOptions &opts = {});

/// Diagonal controlled phase diag(1, 1, 1, e^{i theta}).
Mat4 controlled_phase(double theta);

/// I, CNOT, CZ, SWAP, SWAP_CNOT (= SWAP * CNOT), CNOT_SWAP (= CNOT * SWAP) or
/// Ctheta(<radians>). Throws Error{UnknownGate}.
Mat4 named_gate(std::string_view name);

}  // namespace qgd
