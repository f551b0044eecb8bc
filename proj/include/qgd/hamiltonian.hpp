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

// Coupled-qubit Hamiltonians: the lab-frame model with a general 3x3
// coupling tensor, and its rotating-frame reduction to (J, J_zz, J').

#include <algorithm>
#include <array>
#include <cmath>

#include "qgd/qmat.hpp"

namespace qgd {

/// Real coupling tensor J_{mu nu} multiplying sigma_1^mu (x) sigma_2^nu.
struct CouplingTensor {
  std::array<std::array<double, 3>, 3> entries{};

  double &operator()(Axis mu, Axis nu) {
    return entries[static_cast<int>(mu)][static_cast<int>(nu)];
  }
  double operator()(Axis mu, Axis nu) const {
    return entries[static_cast<int>(mu)][static_cast<int>(nu)];
  }

  static CouplingTensor heisenberg(double g);
  static CouplingTensor ising(double g);
  static CouplingTensor diagonal(double xx, double yy, double zz);

  /// Throws Error{InvalidArgument} on a non-finite entry.
  void validate() const;

  /// sum_{mu nu} J_{mu nu} sigma_1^mu sigma_2^nu.
  Mat4 operator_form() const;
};

struct QubitParams {
  double eps1 = 1.0;
  double eps2 = 1.0;
  double omega1 = 0.0;
  double omega2 = 0.0;
  double phi1 = 0.0;
  double phi2 = 0.0;

  static QubitParams tuned(double eps) { return {eps, eps, 0.0, 0.0, 0.0, 0.0}; }

  void validate() const;
};

/// Rotating-frame couplings. gamma = 2 (J + i J') and phi = arg(J + i J')
/// are derived on demand.
struct RotFrameParams {
  double J = 0.0;
  double Jzz = 0.0;
  double Jprime = 0.0;

  Complex gamma() const { return 2.0 * Complex(J, Jprime); }
  double gamma_abs() const { return 2.0 * std::hypot(J, Jprime); }
  /// arg(J + i J') in (-pi, pi]; zero when J = J' = 0.
  double phi() const;
  /// Largest of |J|, |J_zz|, |J'|.
  double scale() const;

  void validate() const;
};

RotFrameParams reduce_coupling(const CouplingTensor &ct);

/// Sum of squares of the tensor combinations dropped by the reduction:
/// (J_xx - J_yy)/2, (J_xy + J_yx)/2, and the four x/y-z cross terms.
double rwa_discarded_weight(const CouplingTensor &ct);

/// Rotating-frame coupling Hamiltonian in matrix form:
///
///   [ Jzz   0       0      0   ]
///   [ 0    -Jzz     gamma  0   ]
///   [ 0     gamma* -Jzz    0   ]
///   [ 0     0       0      Jzz ]
Mat4 rot_frame_matrix(const RotFrameParams &p);

/// The same Hamiltonian assembled from Pauli products:
/// J (XX + YY) + Jzz ZZ + J' (XY - YX).
Mat4 rot_frame_operator(const RotFrameParams &p);

/// Lab-frame H(t) = sum_i [-(eps_i/2) Z_i + Omega_i cos(eps_i t + phi_i) X_i]
///                  + sum_{mu nu} J_{mu nu} sigma_1^mu sigma_2^nu.
/// With `drive_on` false the Omega terms are omitted.
Generator lab_frame_generator(const CouplingTensor &ct, const QubitParams &qp,
                              bool drive_on);

struct RwaOptions {
  PropagateOptions propagate{};
  /// Allowed change (Frobenius) of the lab-frame propagator when the
  /// integration step is halved.
  double convergence_tol = 1e-8;
};

/// Phase-insensitive distance between the lab-frame evolution over [0, T],
/// moved into the frame co-rotating with tuned qubits of splitting eps, and
/// the rotating-frame evolution exp(-i H_rot T).
///
/// Throws Error{StepTooCoarse} when halving the integrator step changes the
/// lab-frame propagator by more than `convergence_tol`.
double rwa_infidelity(const CouplingTensor &ct, double eps, double T,
                      const RwaOptions &opts = {});

}  // namespace qgd
