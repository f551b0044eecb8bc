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

#include "qgd/hamiltonian.hpp"

#include <cmath>

#include "qgd/error.hpp"

namespace qgd {

CouplingTensor CouplingTensor::heisenberg(double g) { return diagonal(g, g, g); }

CouplingTensor CouplingTensor::ising(double g) { return diagonal(0.0, 0.0, g); }

CouplingTensor CouplingTensor::diagonal(double xx, double yy, double zz) {
  CouplingTensor ct;
  ct(Axis::X, Axis::X) = xx;
  ct(Axis::Y, Axis::Y) = yy;
  ct(Axis::Z, Axis::Z) = zz;
  return ct;
}

void CouplingTensor::validate() const {
  for (const auto &row : entries)
    for (double v : row)
      if (!std::isfinite(v))
        throw Error(ErrorCode::InvalidArgument, "coupling tensor entry is not finite");
}

Mat4 CouplingTensor::operator_form() const {
  Mat4 h = Mat4::Zero();
  for (Axis mu : {Axis::X, Axis::Y, Axis::Z})
    for (Axis nu : {Axis::X, Axis::Y, Axis::Z})
      h += (*this)(mu, nu) * pauli_pair(mu, nu);
  return h;
}

void QubitParams::validate() const {
  if (!(eps1 > 0.0) || !(eps2 > 0.0))
    throw Error(ErrorCode::InvalidArgument, "qubit splittings must be > 0");
  if (!(omega1 >= 0.0) || !(omega2 >= 0.0))
    throw Error(ErrorCode::InvalidArgument, "drive amplitudes must be >= 0");
  if (!std::isfinite(phi1) || !std::isfinite(phi2))
    throw Error(ErrorCode::InvalidArgument, "drive phases must be finite");
}

double RotFrameParams::phi() const {
  if (J == 0.0 && Jprime == 0.0) return 0.0;
  const double a = std::atan2(Jprime, J);
  return a <= -kPi ? a + 2.0 * kPi : a;
}

double RotFrameParams::scale() const {
  return std::max({std::abs(J), std::abs(Jzz), std::abs(Jprime)});
}

void RotFrameParams::validate() const {
  if (!std::isfinite(J) || !std::isfinite(Jzz) || !std::isfinite(Jprime))
    throw Error(ErrorCode::InvalidArgument, "rotating-frame couplings must be finite");
}

RotFrameParams reduce_coupling(const CouplingTensor &ct) {
  ct.validate();
  using enum Axis;
  return RotFrameParams{
      .J = 0.5 * (ct(X, X) + ct(Y, Y)),
      .Jzz = ct(Z, Z),
      .Jprime = 0.5 * (ct(X, Y) - ct(Y, X)),
  };
}

double rwa_discarded_weight(const CouplingTensor &ct) {
  using enum Axis;
  const double anti = 0.5 * (ct(X, X) - ct(Y, Y));
  const double sym = 0.5 * (ct(X, Y) + ct(Y, X));
  double w = anti * anti + sym * sym;
  for (double v : {ct(X, Z), ct(Z, X), ct(Y, Z), ct(Z, Y)}) w += v * v;
  return w;
}

Mat4 rot_frame_matrix(const RotFrameParams &p) {
  const Complex g = p.gamma();
  Mat4 h = Mat4::Zero();
  h(0, 0) = p.Jzz;
  h(1, 1) = -p.Jzz;
  h(2, 2) = -p.Jzz;
  h(3, 3) = p.Jzz;
  h(1, 2) = g;
  h(2, 1) = std::conj(g);
  return h;
}

Mat4 rot_frame_operator(const RotFrameParams &p) {
  using enum Axis;
  return p.J * (pauli_pair(X, X) + pauli_pair(Y, Y)) + p.Jzz * pauli_pair(Z, Z) +
         p.Jprime * (pauli_pair(X, Y) - pauli_pair(Y, X));
}

Generator lab_frame_generator(const CouplingTensor &ct, const QubitParams &qp,
                              bool drive_on) {
  ct.validate();
  qp.validate();
  const Mat2 id = pauli::identity();
  const Mat4 z1 = kron(pauli::z(), id);
  const Mat4 z2 = kron(id, pauli::z());
  const Mat4 x1 = kron(pauli::x(), id);
  const Mat4 x2 = kron(id, pauli::x());
  const Mat4 drift = -0.5 * qp.eps1 * z1 - 0.5 * qp.eps2 * z2 + ct.operator_form();
  if (!drive_on) return [drift](double) { return drift; };
  return [=](double t) -> Mat4 {
    return drift + qp.omega1 * std::cos(qp.eps1 * t + qp.phi1) * x1 +
           qp.omega2 * std::cos(qp.eps2 * t + qp.phi2) * x2;
  };
}

double rwa_infidelity(const CouplingTensor &ct, double eps, double T,
                      const RwaOptions &opts) {
  if (!(eps > 0.0) || !(T > 0.0))
    throw Error(ErrorCode::InvalidArgument, "rwa_infidelity needs eps > 0 and T > 0");

  const Generator lab = lab_frame_generator(ct, QubitParams::tuned(eps), false);
  const double base_step = opts.propagate.norm_step / spectral_norm(lab(0.0));

  auto run = [&](double step) {
    PiecewiseHamiltonian ph;
    ph.add(SampledSegment{lab, T, step});
    return propagate(ph, opts.propagate);
  };
  const Mat4 coarse = run(base_step);
  const Mat4 fine = run(0.5 * base_step);
  const double change = distance(coarse, fine, false);
  if (!(change <= opts.convergence_tol)) {
    throw Error(ErrorCode::StepTooCoarse,
                "lab-frame propagator changed by " + std::to_string(change) +
                    " when halving the step");
  }

  const Mat2 id = pauli::identity();
  const Mat4 h0 = -0.5 * eps * (kron(pauli::z(), id) + kron(id, pauli::z()));
  // e^{+i H0 T} = expm_hermitian(H0, -T).
  const Mat4 u_rot = expm_hermitian(h0, -T) * fine;
  const Mat4 u_rwa = expm_hermitian(rot_frame_matrix(reduce_coupling(ct)), T);
  return distance(u_rot, u_rwa, true);
}

}  // namespace qgd
