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

#include "qgd/schedule.hpp"

#include <cmath>
#include <sstream>

#include "qgd/error.hpp"

namespace qgd {

void validate(const PulseOp &op) {
  if (const auto *r = std::get_if<Rotate>(&op)) {
    if (r->qubit != 1 && r->qubit != 2)
      throw Error(ErrorCode::InvalidArgument,
                  "rotation qubit must be 1 or 2, got " + std::to_string(r->qubit));
    if (!std::isfinite(r->angle))
      throw Error(ErrorCode::InvalidArgument, "rotation angle must be finite");
  } else if (const auto *e = std::get_if<Entangle>(&op)) {
    if (!(e->duration >= 0.0) || !std::isfinite(e->duration))
      throw Error(ErrorCode::InvalidArgument, "entangle duration must be finite and >= 0");
  } else if (!std::isfinite(std::get<GlobalPhase>(op).angle)) {
    throw Error(ErrorCode::InvalidArgument, "phase angle must be finite");
  }
}

PulseSchedule::PulseSchedule(std::vector<PulseOp> ops) : ops_(std::move(ops)) {
  for (const auto &op : ops_) validate(op);
}

PulseSchedule &PulseSchedule::rotate(Axis axis, double angle, int qubit,
                                     bool simultaneous) {
  return push(Rotate{axis, angle, qubit, simultaneous});
}

PulseSchedule &PulseSchedule::entangle(double duration) {
  return push(Entangle{duration});
}

PulseSchedule &PulseSchedule::phase(double angle) { return push(GlobalPhase{angle}); }

PulseSchedule &PulseSchedule::push(const PulseOp &op) {
  validate(op);
  ops_.push_back(op);
  return *this;
}

PulseSchedule &PulseSchedule::append(const PulseSchedule &later) {
  ops_.insert(ops_.end(), later.ops_.begin(), later.ops_.end());
  return *this;
}

double PulseSchedule::total_entangling_time() const {
  double t = 0.0;
  for (const auto &op : ops_)
    if (const auto *e = std::get_if<Entangle>(&op)) t += e->duration;
  return t;
}

std::size_t PulseSchedule::entangle_count() const {
  std::size_t n = 0;
  for (const auto &op : ops_) n += std::holds_alternative<Entangle>(op) ? 1 : 0;
  return n;
}

std::string PulseSchedule::to_string() const {
  std::ostringstream out;
  out.precision(6);
  bool first = true;
  for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
    if (!first) out << ' ';
    first = false;
    if (const auto *r = std::get_if<Rotate>(&*it)) {
      out << 'R' << axis_name(r->axis) << '(' << r->angle << ")_" << r->qubit;
    } else if (const auto *e = std::get_if<Entangle>(&*it)) {
      out << "U(" << e->duration << ')';
    } else {
      out << "exp(i " << std::get<GlobalPhase>(*it).angle << ')';
    }
  }
  return out.str();
}

PulseSchedule concatenate(const PulseSchedule &first, const PulseSchedule &second) {
  PulseSchedule out = first;
  out.append(second);
  return out;
}

}  // namespace qgd
