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

#include "qgd/compiler.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qgd/entangler.hpp"
#include "qgd/error.hpp"

namespace qgd {

namespace {

constexpr double kHalfPi = kPi / 2.0;

bool negligible(double v, double scale) { return std::abs(v) <= kAlgebraicTol * scale; }

double sign_of(double v) { return v < 0.0 ? -1.0 : 1.0; }

// Hadamard on `qubit` as i Rx(pi) Ry(pi/2).
void hadamard(PulseSchedule &s, int qubit) {
  s.rotate(Axis::Y, kHalfPi, qubit).rotate(Axis::X, kPi, qubit).phase(kHalfPi);
}

PulseSchedule ising_schedule(const RotFrameParams &p, double &delta_t) {
  const double s = sign_of(p.Jzz);
  delta_t = kPi / (4.0 * std::abs(p.Jzz));
  PulseSchedule out;
  hadamard(out, 2);
  out.entangle(delta_t);  // A(0, 0, s pi/4)
  out.rotate(Axis::Z, -s * kHalfPi, 2).rotate(Axis::Z, -s * kHalfPi, 1, true);
  hadamard(out, 2);
  out.phase(-s * kPi / 4.0);
  return out;
}

PulseSchedule xy_schedule(const RotFrameParams &p, double &delta_t) {
  const double s = sign_of(p.J);
  delta_t = kPi / (4.0 * std::abs(p.J));
  // int J dt = s pi/4 must land on A(s pi/4, s pi/4, 0).
  const Mat4 landed = expm_hermitian(rot_frame_matrix(p), delta_t);
  const Mat4 expected = canonical_entangler({s * kPi / 4.0, s * kPi / 4.0, 0.0});
  if (distance(landed, expected, false) > kDefaultTol)
    throw std::logic_error("XY interval does not reach A(pi/4, pi/4, 0)");

  PulseSchedule out;
  out.rotate(Axis::Y, -kHalfPi, 2);
  out.entangle(delta_t);
  out.rotate(Axis::X, -kHalfPi, 2);
  out.rotate(Axis::Y, kHalfPi, 1).rotate(Axis::Y, s * kHalfPi, 2, true);
  out.rotate(Axis::X, s * kHalfPi, 1).rotate(Axis::X, kHalfPi, 2, true);
  out.phase(s * kHalfPi);
  return out;
}

// CNOT from A(s pi/4, 0, 0) already in `out`.
void cnot_from_x_axis(PulseSchedule &out, double s) {
  out.rotate(Axis::X, -s * kHalfPi, 1).rotate(Axis::X, -s * kHalfPi, 2, true);
  out.rotate(Axis::Y, -kHalfPi, 1);
  out.phase(-s * kPi / 4.0);
}

PulseSchedule two_shot_schedule(const RotFrameParams &p, int q, double &delta_t) {
  const double s = sign_of(p.J);
  delta_t = kPi / (8.0 * std::abs(p.J));
  PulseSchedule out;
  out.rotate(Axis::Y, kHalfPi, 1);
  out.entangle(delta_t).rotate(Axis::X, kPi, q).entangle(delta_t).rotate(Axis::X, -kPi, q);
  cnot_from_x_axis(out, s);
  return out;
}

PulseSchedule general_schedule(const RotFrameParams &p, int q, double &delta_t) {
  const double phi = p.phi();
  delta_t = kPi / (8.0 * std::hypot(p.J, p.Jprime));
  PulseSchedule out;
  out.rotate(Axis::Y, kHalfPi, 1);
  out.rotate(Axis::Z, phi, 2);
  if (q == 1) {
    out.entangle(delta_t).rotate(Axis::X, kPi, 1).entangle(delta_t);
    // Rx(-pi/2) Rx(-pi) = -Rx(pi/2): the closing refocus folds into the
    // next rotation and the sign into the global phase.
    out.rotate(Axis::X, kHalfPi, 1);
    out.rotate(Axis::Z, -phi, 2);
    out.rotate(Axis::Y, -kHalfPi, 1).rotate(Axis::X, -kHalfPi, 2, true);
    out.phase(3.0 * kPi / 4.0);
    return out;
  }
  // On qubit 2 the refocusing axis must follow the Rz(phi) frame.
  out.entangle(delta_t);
  out.rotate(Axis::Z, -phi, 2).rotate(Axis::X, kPi, 2).rotate(Axis::Z, phi, 2);
  out.entangle(delta_t);
  out.rotate(Axis::Z, -phi, 2).rotate(Axis::X, -kPi, 2);
  cnot_from_x_axis(out, 1.0);
  return out;
}

}  // namespace

std::string_view to_string(Branch branch) {
  switch (branch) {
    case Branch::IsingSingleShot: return "ising_single_shot";
    case Branch::XySingleShotSwapCnot: return "xy_single_shot_swapcnot";
    case Branch::TwoShotRefocus: return "two_shot_refocus";
    case Branch::GeneralJPrime: return "general_jprime";
  }
  return "unknown";
}

std::string_view to_string(Prefer prefer) {
  switch (prefer) {
    case Prefer::Auto: return "auto";
    case Prefer::Cnot: return "cnot";
    case Prefer::SwapCnot: return "swap_cnot";
  }
  return "auto";
}

Prefer prefer_from_string(std::string_view name) {
  if (name == "auto") return Prefer::Auto;
  if (name == "cnot") return Prefer::Cnot;
  if (name == "swap_cnot") return Prefer::SwapCnot;
  throw Error(ErrorCode::InvalidArgument, "unknown preference '" + std::string(name) + "'");
}

CompileResult compile_cnot(const RotFrameParams &p, const CompileOptions &opts) {
  p.validate();
  if (opts.refocus_qubit != 1 && opts.refocus_qubit != 2)
    throw Error(ErrorCode::InvalidArgument, "refocus qubit must be 1 or 2");
  const double scale = p.scale();
  if (scale == 0.0)
    throw Error(ErrorCode::ZeroCoupling, "all couplings vanish; no entangling evolution");

  const bool no_j = negligible(p.J, scale);
  const bool no_jzz = negligible(p.Jzz, scale);
  const bool no_jprime = negligible(p.Jprime, scale);
  const bool pure_ising = no_j && no_jprime;

  if (opts.prefer == Prefer::SwapCnot && !(no_jzz && no_jprime && !no_j))
    throw Error(ErrorCode::InvalidArgument,
                "single-shot SWAP*CNOT needs J != 0 and J_zz = J' = 0");
  if (opts.force_general && pure_ising)
    throw Error(ErrorCode::InvalidArgument,
                "the general construction excludes the pure Ising coupling");

  CompileResult r;
  r.params = p;
  r.target = "CNOT";
  if (pure_ising) {
    r.branch = Branch::IsingSingleShot;
    r.schedule = ising_schedule(p, r.delta_t);
  } else if (!no_jprime || opts.force_general) {
    r.branch = Branch::GeneralJPrime;
    r.schedule = general_schedule(p, opts.refocus_qubit, r.delta_t);
  } else if (opts.prefer == Prefer::SwapCnot || (opts.prefer == Prefer::Auto && no_jzz)) {
    r.branch = Branch::XySingleShotSwapCnot;
    r.target = "SWAP_CNOT";
    r.schedule = xy_schedule(p, r.delta_t);
  } else {
    r.branch = Branch::TwoShotRefocus;
    r.schedule = two_shot_schedule(p, opts.refocus_qubit, r.delta_t);
  }

  r.target_matrix = named_gate(r.target);
  r.verification = verify_schedule(r.schedule, p, r.target_matrix, VerifyMode::Exact,
                                   r.target, opts.tol);
  if (!r.verification.passed()) {
    throw std::runtime_error("compiled " + std::string(to_string(r.branch)) +
                             " schedule misses " + r.target + " by " +
                             std::to_string(r.verification.distance));
  }
  return r;
}

Mat4 controlled_phase(double theta) {
  Mat4 m = Mat4::Identity();
  m(3, 3) = std::polar(1.0, theta);
  return m;
}

Mat4 named_gate(std::string_view name) {
  Mat4 cnot = Mat4::Zero();
  cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
  Mat4 swap = Mat4::Zero();
  swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1.0;

  if (name == "I") return Mat4::Identity();
  if (name == "CNOT") return cnot;
  if (name == "CZ") {
    Mat4 cz = Mat4::Identity();
    cz(3, 3) = -1.0;
    return cz;
  }
  if (name == "SWAP") return swap;
  if (name == "SWAP_CNOT") return swap * cnot;
  if (name == "CNOT_SWAP") return cnot * swap;
  if (name.starts_with("Ctheta(") && name.ends_with(")")) {
    const std::string arg(name.substr(7, name.size() - 8));
    std::size_t used = 0;
    double theta = 0.0;
    try {
      theta = std::stod(arg, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used == arg.size() && used > 0 && std::isfinite(theta)) return controlled_phase(theta);
  }
  throw Error(ErrorCode::UnknownGate, "unknown gate '" + std::string(name) + "'");
}

}  // namespace qgd
