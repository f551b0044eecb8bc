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

#include <cmath>
#include <cstdio>
#include <sstream>

#include "qgd/entangler.hpp"
#include "qgd/error.hpp"

namespace qgd {

namespace {

struct Interval {
  double start = 0.0;
  double duration = 0.0;
  EntanglerCoords origin;
  EntanglerCoords rate;
};

// Number of half turns in `angle`, or throws when it is not a multiple of pi.
long half_turns(const Rotate &r) {
  const double k = r.angle / kPi;
  const double nearest = std::round(k);
  if (std::abs(k - nearest) > 1e-9) {
    throw Error(ErrorCode::UnsupportedOp,
                "trajectory only supports refocusing pi rotations, got R" +
                    std::string(1, axis_name(r.axis)) + "(" + std::to_string(r.angle) + ")");
  }
  return static_cast<long>(nearest);
}

std::vector<Interval> intervals(const RotFrameParams &p, const PulseSchedule &schedule) {
  std::vector<Interval> out;
  double sx = 1.0, sy = 1.0, sz = 1.0;
  double t = 0.0;
  EntanglerCoords at;
  for (const auto &op : schedule.ops()) {
    if (const auto *r = std::get_if<Rotate>(&op)) {
      if (half_turns(*r) % 2 == 0) continue;
      switch (r->axis) {
        case Axis::X: sy = -sy; sz = -sz; break;
        case Axis::Y: sx = -sx; sz = -sz; break;
        case Axis::Z: sx = -sx; sy = -sy; break;
      }
    } else if (const auto *e = std::get_if<Entangle>(&op)) {
      if (e->duration <= 0.0) continue;
      Interval iv{t, e->duration, at, {sx * p.J, sy * p.J, sz * p.Jzz}};
      at = at + iv.rate * e->duration;
      t += e->duration;
      out.push_back(iv);
    }
  }
  return out;
}

TrajectorySample sample_at(const std::vector<Interval> &ivs, double t) {
  // Intervals are contiguous in time; pick the last one starting at or before t.
  const Interval *iv = &ivs.front();
  for (const auto &candidate : ivs)
    if (candidate.start <= t) iv = &candidate;
  const double local = std::min(t - iv->start, iv->duration);
  const EntanglerCoords raw = iv->origin + iv->rate * local;
  return {t, raw, raw.wrapped()};
}

}  // namespace

Trajectory trajectory(const RotFrameParams &p, const PulseSchedule &schedule,
                      std::size_t samples) {
  p.validate();
  if (std::abs(p.Jprime) > kAlgebraicTol * std::max(1.0, p.scale()))
    throw Error(ErrorCode::NonzeroJPrime,
                "closed-form trajectories need J' = 0, got J' = " + std::to_string(p.Jprime));

  const auto ivs = intervals(p, schedule);
  Trajectory out{TrajectorySample{}};
  if (ivs.empty()) return out;

  const double total = ivs.back().start + ivs.back().duration;
  if (samples == 0) {
    for (const auto &iv : ivs) out.push_back(sample_at(ivs, iv.start + iv.duration));
    return out;
  }
  for (std::size_t k = 1; k < samples; ++k) {
    const double t = total * static_cast<double>(k) / static_cast<double>(samples - 1);
    out.push_back(sample_at(ivs, t));
  }
  return out;
}

std::string trajectory_csv(const Trajectory &traj) {
  std::ostringstream out;
  out << "t,x,y,z,x_wrapped,y_wrapped,z_wrapped\n";
  char buf[32];
  auto put = [&](double v, bool last) {
    std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
    out << buf << (last ? '\n' : ',');
  };
  for (const auto &s : traj) {
    put(s.t, false);
    put(s.raw.x, false);
    put(s.raw.y, false);
    put(s.raw.z, false);
    put(s.wrapped.x, false);
    put(s.wrapped.y, false);
    put(s.wrapped.z, true);
  }
  return out.str();
}

}  // namespace qgd
