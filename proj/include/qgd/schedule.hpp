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

// Pulse schedules. Operations are stored in application order (the first
// element acts first); to_string() renders them right to left, the way
// operator products are written.

#include <string>
#include <variant>
#include <vector>

#include "qgd/qmat.hpp"

namespace qgd {

/// Instantaneous single-qubit rotation exp(-i angle sigma^axis / 2).
struct Rotate {
  Axis axis = Axis::X;
  double angle = 0.0;
  int qubit = 1;
  /// Commutes with, and may run at the same time as, the preceding rotation.
  bool simultaneous = false;
};

/// Tuned-qubit evolution under the rotating-frame coupling for `duration`.
struct Entangle {
  double duration = 0.0;
};

/// Multiplies the state by exp(i angle).
struct GlobalPhase {
  double angle = 0.0;
};

using PulseOp = std::variant<Rotate, Entangle, GlobalPhase>;

class PulseSchedule {
 public:
  PulseSchedule() = default;
  explicit PulseSchedule(std::vector<PulseOp> ops);

  PulseSchedule &rotate(Axis axis, double angle, int qubit, bool simultaneous = false);
  PulseSchedule &entangle(double duration);
  PulseSchedule &phase(double angle);
  PulseSchedule &push(const PulseOp &op);
  /// Appends `later`, which acts after everything already present.
  PulseSchedule &append(const PulseSchedule &later);

  const std::vector<PulseOp> &ops() const { return ops_; }
  bool empty() const { return ops_.empty(); }
  std::size_t size() const { return ops_.size(); }

  double total_entangling_time() const;
  std::size_t entangle_count() const;

  std::string to_string() const;

 private:
  std::vector<PulseOp> ops_;
};

/// Schedule running `first` and then `second`.
PulseSchedule concatenate(const PulseSchedule &first, const PulseSchedule &second);

/// Throws Error{InvalidArgument} for a bad qubit index, a negative or
/// non-finite duration, or a non-finite angle.
void validate(const PulseOp &op);

}  // namespace qgd
