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

#include "qgd/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qgd/error.hpp"

namespace qgd {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonHermitianInput: return "NonHermitianInput";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::UnsupportedOp: return "UnsupportedOp";
    case ErrorCode::NonzeroJPrime: return "NonzeroJPrime";
    case ErrorCode::ZeroCoupling: return "ZeroCoupling";
    case ErrorCode::UnknownGate: return "UnknownGate";
    case ErrorCode::StepTooCoarse: return "StepTooCoarse";
  }
  return "Unknown";
}

char axis_name(Axis axis) {
  switch (axis) {
    case Axis::X: return 'x';
    case Axis::Y: return 'y';
    case Axis::Z: return 'z';
  }
  return '?';
}

Axis axis_from_char(char c) {
  switch (c) {
    case 'x': case 'X': return Axis::X;
    case 'y': case 'Y': return Axis::Y;
    case 'z': case 'Z': return Axis::Z;
    default:
      throw Error(ErrorCode::InvalidArgument,
                  std::string("unknown rotation axis '") + c + "'");
  }
}

namespace pauli {

Mat2 identity() { return Mat2::Identity(); }

Mat2 x() {
  Mat2 m;
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

Mat2 y() {
  Mat2 m;
  m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return m;
}

Mat2 z() {
  Mat2 m;
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

Mat2 of(Axis axis) {
  switch (axis) {
    case Axis::X: return x();
    case Axis::Y: return y();
    case Axis::Z: return z();
  }
  return identity();
}

}  // namespace pauli

Mat4 kron(const Mat2 &a, const Mat2 &b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

Mat4 pauli_pair(Axis first, Axis second) {
  return kron(pauli::of(first), pauli::of(second));
}

double hermiticity_defect(const Mat4 &m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_defect(const Mat4 &m) {
  return (m.adjoint() * m - Mat4::Identity()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const Mat4 &m, double tol) {
  return hermiticity_defect(m) <= tol * std::max(1.0, m.cwiseAbs().maxCoeff());
}

bool is_unitary(const Mat4 &m, double tol) {
  return m.allFinite() && unitarity_defect(m) <= tol;
}

Mat4 expm_hermitian(const Mat4 &h, double t) {
  if (!h.allFinite() || !is_hermitian(h)) {
    throw Error(ErrorCode::NonHermitianInput,
                "generator is not Hermitian (defect " +
                    std::to_string(hermiticity_defect(h)) + ")");
  }
  // Symmetrize so the solver sees an exactly self-adjoint input.
  const Mat4 sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat4> solver(sym);
  const Eigen::Vector4d &evals = solver.eigenvalues();
  const Mat4 &vecs = solver.eigenvectors();
  Eigen::Vector4cd phases;
  for (int k = 0; k < 4; ++k) phases(k) = std::polar(1.0, -evals(k) * t);
  return vecs * phases.asDiagonal() * vecs.adjoint();
}

double distance(const Mat4 &u, const Mat4 &v, bool up_to_global_phase) {
  if (!up_to_global_phase) return (u - v).norm();
  // The optimal phase aligns v with u: theta = arg tr(v^dagger u). Evaluating
  // the residual directly keeps full precision near zero, unlike the
  // equivalent closed form sqrt(8 - 2 |tr(u^dagger v)|).
  const Complex overlap = (v.adjoint() * u).trace();
  const Complex phase =
      std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0);
  return (u - phase * v).norm();
}

double spectral_norm(const Mat4 &h) {
  Eigen::SelfAdjointEigenSolver<Mat4> solver(0.5 * (h + h.adjoint()),
                                             Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

// ---------------------------------------------------------------------------

PiecewiseHamiltonian &PiecewiseHamiltonian::add(ConstantSegment segment) {
  if (!(segment.duration >= 0.0) || !std::isfinite(segment.duration))
    throw Error(ErrorCode::InvalidArgument, "segment duration must be >= 0");
  segments_.emplace_back(std::move(segment));
  return *this;
}

PiecewiseHamiltonian &PiecewiseHamiltonian::add(SampledSegment segment) {
  if (!(segment.duration >= 0.0) || !std::isfinite(segment.duration))
    throw Error(ErrorCode::InvalidArgument, "segment duration must be >= 0");
  if (!(segment.step >= 0.0))
    throw Error(ErrorCode::InvalidArgument, "segment step must be >= 0");
  if (!segment.generator)
    throw Error(ErrorCode::InvalidArgument, "sampled segment has no generator");
  segments_.emplace_back(std::move(segment));
  return *this;
}

double PiecewiseHamiltonian::total_duration() const {
  double total = 0.0;
  for (const auto &seg : segments_)
    total += std::visit([](const auto &s) { return s.duration; }, seg);
  return total;
}

namespace {

double default_step(const SampledSegment &seg, double t0, double norm_step) {
  double norm = 0.0;
  for (double f : {0.0, 0.25, 0.5, 0.75, 1.0})
    norm = std::max(norm, spectral_norm(seg.generator(t0 + f * seg.duration)));
  if (norm == 0.0) return seg.duration;
  return norm_step / norm;
}

Mat4 step_propagator(const Generator &gen, double t, double h, StepScheme scheme) {
  if (scheme == StepScheme::Midpoint) return expm_hermitian(gen(t + 0.5 * h), h);

  const double offset = std::sqrt(3.0) / 6.0;
  const Mat4 h1 = gen(t + (0.5 - offset) * h);
  const Mat4 h2 = gen(t + (0.5 + offset) * h);
  // Omega = -i K with K = h/2 (H1 + H2) - i (sqrt3/12) h^2 [H2, H1].
  const Mat4 comm = h2 * h1 - h1 * h2;
  const Mat4 k = 0.5 * h * (h1 + h2) +
                 Complex(0.0, -std::sqrt(3.0) / 12.0 * h * h) * comm;
  return expm_hermitian(k, 1.0);
}

}  // namespace

Mat4 propagate(const PiecewiseHamiltonian &ph, const PropagateOptions &opts) {
  if (!(opts.norm_step > 0.0))
    throw Error(ErrorCode::InvalidArgument, "norm_step must be > 0");
  Mat4 u = Mat4::Identity();
  double t0 = 0.0;
  for (const auto &segment : ph.segments()) {
    if (const auto *c = std::get_if<ConstantSegment>(&segment)) {
      u = expm_hermitian(c->generator, c->duration) * u;
      t0 += c->duration;
      continue;
    }
    const auto &s = std::get<SampledSegment>(segment);
    if (s.duration > 0.0) {
      const double step = s.step > 0.0 ? s.step : default_step(s, t0, opts.norm_step);
      const auto n = static_cast<long>(std::max(1.0, std::ceil(s.duration / step)));
      const double h = s.duration / static_cast<double>(n);
      for (long k = 0; k < n; ++k)
        u = step_propagator(s.generator, t0 + static_cast<double>(k) * h, h,
                            opts.scheme) * u;
    }
    t0 += s.duration;
  }
  return u;
}

}  // namespace qgd
