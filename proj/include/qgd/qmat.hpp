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

// Dense 2x2 / 4x4 complex algebra for two-qubit operators.
//
// Basis ordering is |00>, |01>, |10>, |11> with qubit 1 as the left tensor
// factor. Time is measured in units where hbar = 1, so a generator H and a
// duration t combine as exp(-i H t).

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <variant>
#include <vector>

#include "qgd/error.hpp"

namespace qgd {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;

inline constexpr double kPi = 3.14159265358979323846;

/// Tolerance for algebraic identities (exact constructions).
inline constexpr double kAlgebraicTol = 1e-12;
/// Default numerical tolerance for comparisons against targets.
inline constexpr double kDefaultTol = 1e-10;

enum class Axis { X = 0, Y = 1, Z = 2 };

char axis_name(Axis axis);
Axis axis_from_char(char c);

namespace pauli {
Mat2 identity();
Mat2 x();
Mat2 y();
Mat2 z();
Mat2 of(Axis axis);
}  // namespace pauli

Mat4 kron(const Mat2 &a, const Mat2 &b);

/// sigma_1^mu (x) sigma_2^nu.
Mat4 pauli_pair(Axis first, Axis second);

/// Largest entry of |m - m^dagger|.
double hermiticity_defect(const Mat4 &m);
/// Largest entry of |m^dagger m - I|.
double unitarity_defect(const Mat4 &m);

bool is_hermitian(const Mat4 &m, double tol = kAlgebraicTol);
bool is_unitary(const Mat4 &m, double tol = kDefaultTol);

/// exp(-i h t) for Hermitian h, by eigendecomposition.
///
/// The Hermiticity check is relative: |h - h^dagger|_max must not exceed
/// 1e-12 * max(1, |h|_max). Throws Error{NonHermitianInput} otherwise.
Mat4 expm_hermitian(const Mat4 &h, double t);

/// Frobenius distance |u - v|_F, or min over theta of |u - e^{i theta} v|_F
/// when `up_to_global_phase` is set.
double distance(const Mat4 &u, const Mat4 &v, bool up_to_global_phase);

// ---------------------------------------------------------------------------
// Time-ordered propagation

/// H(t), with t measured from the start of the owning schedule.
using Generator = std::function<Mat4(double)>;

struct ConstantSegment {
  Mat4 generator;
  double duration = 0.0;
};

/// Time-dependent generator integrated on a uniform grid. A step of zero
/// selects the default, sized so |H| * step <= PropagateOptions::norm_step.
struct SampledSegment {
  Generator generator;
  double duration = 0.0;
  double step = 0.0;
};

using HamiltonianSegment = std::variant<ConstantSegment, SampledSegment>;

/// Ordered sequence of evolution segments; later segments act later (on the
/// left of the accumulated propagator).
class PiecewiseHamiltonian {
 public:
  PiecewiseHamiltonian() = default;

  PiecewiseHamiltonian &add(ConstantSegment segment);
  PiecewiseHamiltonian &add(SampledSegment segment);

  const std::vector<HamiltonianSegment> &segments() const { return segments_; }
  double total_duration() const;
  bool empty() const { return segments_.empty(); }

 private:
  std::vector<HamiltonianSegment> segments_;
};

enum class StepScheme {
  /// exp(-i H(t + h/2) h) per step; second order.
  Midpoint,
  /// Two-point Gauss-Legendre Magnus expansion; fourth order, and exact on
  /// commuting generators whose entries are cubic in t.
  Magnus4,
};

struct PropagateOptions {
  double norm_step = 0.005;
  StepScheme scheme = StepScheme::Magnus4;
};

Mat4 propagate(const PiecewiseHamiltonian &ph, const PropagateOptions &opts = {});

/// Largest |eigenvalue| of a Hermitian matrix.
double spectral_norm(const Mat4 &h);

}  // namespace qgd
