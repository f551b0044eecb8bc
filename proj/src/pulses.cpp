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

#include "qgd/pulses.hpp"

#include <cmath>
#include <stdexcept>

#include "qgd/error.hpp"

namespace qgd {

Mat2 rotation2(Axis axis, double angle) {
  return std::cos(0.5 * angle) * Mat2::Identity() +
         Complex(0.0, -std::sin(0.5 * angle)) * pauli::of(axis);
}

Mat4 rotation_matrix(Axis axis, double angle, int qubit) {
  const Mat2 r = rotation2(axis, angle);
  switch (qubit) {
    case 1: return kron(r, Mat2::Identity());
    case 2: return kron(Mat2::Identity(), r);
    default:
      throw Error(ErrorCode::InvalidArgument,
                  "qubit must be 1 or 2, got " + std::to_string(qubit));
  }
}

Mat4 op_matrix(const PulseOp &op, const RotFrameParams &p) {
  if (const auto *r = std::get_if<Rotate>(&op))
    return rotation_matrix(r->axis, r->angle, r->qubit);
  if (const auto *e = std::get_if<Entangle>(&op))
    return expm_hermitian(rot_frame_matrix(p), e->duration);
  return std::polar(1.0, std::get<GlobalPhase>(op).angle) * Mat4::Identity();
}

Mat4 simulate_schedule(const PulseSchedule &s, const RotFrameParams &p) {
  p.validate();
  Mat4 u = Mat4::Identity();
  for (const auto &op : s.ops()) u = op_matrix(op, p) * u;
  return u;
}

std::string_view to_string(VerifyMode mode) {
  switch (mode) {
    case VerifyMode::Exact: return "exact";
    case VerifyMode::ExactUpToPhase: return "exact_up_to_phase";
    case VerifyMode::LocalClass: return "local_class";
  }
  return "exact";
}

VerifyMode verify_mode_from_string(std::string_view name) {
  if (name == "exact") return VerifyMode::Exact;
  if (name == "exact_up_to_phase" || name == "phase") return VerifyMode::ExactUpToPhase;
  if (name == "local_class" || name == "class") return VerifyMode::LocalClass;
  throw Error(ErrorCode::InvalidArgument, "unknown verification mode '" +
                                              std::string(name) + "'");
}

bool VerificationReport::passed() const {
  switch (mode) {
    case VerifyMode::Exact: return pass_exact;
    case VerifyMode::ExactUpToPhase: return pass_up_to_phase;
    case VerifyMode::LocalClass: return pass_class;
  }
  return false;
}

VerificationReport verify_schedule(const PulseSchedule &s, const RotFrameParams &p,
                                   const Mat4 &target, VerifyMode mode,
                                   std::string target_name, double tol) {
  if (!is_unitary(target, 1e-9))
    throw Error(ErrorCode::NotUnitary, "verification target is not unitary");
  const Mat4 u = simulate_schedule(s, p);

  VerificationReport r;
  r.target = std::move(target_name);
  r.mode = mode;
  r.tolerance = tol;
  r.distance = distance(u, target, false);
  r.distance_up_to_phase = distance(u, target, true);
  r.invariant_distance = invariant_distance(makhlin_invariants(u), makhlin_invariants(target));
  r.pass_exact = r.distance < tol;
  r.pass_up_to_phase = r.distance_up_to_phase < tol;
  r.pass_class = r.pass_up_to_phase || r.invariant_distance < tol;
  r.entangling_time = s.total_entangling_time();
  return r;
}

void check_conventions() {
  const Mat2 hadamard = (Mat2() << 1.0, 1.0, 1.0, -1.0).finished() / std::sqrt(2.0);
  const Mat2 built =
      Complex(0.0, 1.0) * rotation2(Axis::X, kPi) * rotation2(Axis::Y, kPi / 2.0);
  if ((built - hadamard).cwiseAbs().maxCoeff() > kAlgebraicTol)
    throw std::logic_error("rotation convention check failed: i Rx(pi) Ry(pi/2) != H");

  const RotFrameParams p{0.37, -0.81, 0.0};
  const Mat4 rx = rotation_matrix(Axis::X, kPi, 1);
  const Mat4 reflected = rx.adjoint() * rot_frame_matrix(p) * rx;
  using enum Axis;
  const Mat4 expected =
      p.J * (pauli_pair(X, X) - pauli_pair(Y, Y)) - p.Jzz * pauli_pair(Z, Z);
  if ((reflected - expected).cwiseAbs().maxCoeff() > kAlgebraicTol)
    throw std::logic_error("rotation convention check failed: refocusing conjugation");
}

}  // namespace qgd
