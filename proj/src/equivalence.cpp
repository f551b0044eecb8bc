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

#include "qgd/equivalence.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "qgd/error.hpp"

namespace qgd {

namespace {

constexpr double kUnitaryInputTol = 1e-9;

void require_unitary(const Mat4 &u, const char *what) {
  if (!is_unitary(u, kUnitaryInputTol)) {
    throw Error(ErrorCode::NotUnitary,
                std::string(what) + " is not unitary (defect " +
                    std::to_string(unitarity_defect(u)) + ")");
  }
}

// Diagonals of XX, YY, ZZ in the magic basis; each is a pattern of +-1.
struct MagicSigns {
  std::array<Eigen::Vector4d, 3> diag;
};

const MagicSigns &magic_signs() {
  static const MagicSigns signs = [] {
    MagicSigns s;
    const Mat4 &q = magic_basis();
    for (Axis a : {Axis::X, Axis::Y, Axis::Z})
      s.diag[static_cast<int>(a)] =
          (q.adjoint() * pauli_pair(a, a) * q).diagonal().real();
    return s;
  }();
  return signs;
}

}  // namespace

const Mat4 &magic_basis() {
  static const Mat4 q = [] {
    const Complex i(0.0, 1.0);
    Mat4 m;
    m << 1, 0, 0, i,
         0, i, 1, 0,
         0, i, -1, 0,
         1, 0, 0, -i;
    return Mat4(m / std::sqrt(2.0));
  }();
  return q;
}

MakhlinInvariants makhlin_invariants(const Mat4 &u) {
  require_unitary(u, "input");
  const Mat4 &q = magic_basis();
  const Mat4 ub = q.adjoint() * u * q;
  const Mat4 m = ub.transpose() * ub;
  const Complex det = u.determinant();
  const Complex tr = m.trace();
  const Complex tr2 = (m * m).trace();
  const Complex g2 = (tr * tr - tr2) / (4.0 * det);
  return {tr * tr / (16.0 * det), g2.real(), g2.imag()};
}

double invariant_distance(const MakhlinInvariants &a, const MakhlinInvariants &b) {
  return std::max(std::abs(a.g1 - b.g1), std::abs(a.g2 - b.g2));
}

bool locally_equivalent(const Mat4 &u, const Mat4 &v, double tol) {
  return invariant_distance(makhlin_invariants(u), makhlin_invariants(v)) < tol;
}

Mat4 KakFactors::reconstruct() const {
  return std::polar(1.0, phase) * post.matrix() * canonical_entangler(coords) *
         pre.matrix();
}

KronFactors kron_factor(const Mat4 &m) {
  int bi = 0, bj = 0;
  double best = -1.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const double n = m.block<2, 2>(2 * i, 2 * j).norm();
      if (n > best) {
        best = n;
        bi = i;
        bj = j;
      }
    }
  KronFactors out;
  out.b = m.block<2, 2>(2 * bi, 2 * bj);
  out.b /= std::sqrt(out.b.determinant());
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.a(i, j) = 0.5 * (out.b.adjoint() * m.block<2, 2>(2 * i, 2 * j)).trace();
  const Complex root = std::sqrt(out.a.determinant());
  out.a /= root;
  out.phase = std::arg(root);
  out.residual =
      (m - std::polar(1.0, out.phase) * kron(out.a, out.b)).cwiseAbs().maxCoeff();
  return out;
}

KakFactors kak_decompose(const Mat4 &u, const KakOptions &opts) {
  require_unitary(u, "input");
  const Mat4 &q = magic_basis();

  // Move to SU(4).
  const double phase0 = std::arg(u.determinant()) / 4.0;
  const Mat4 ub = q.adjoint() * (std::polar(1.0, -phase0) * u) * q;

  // M is complex symmetric and unitary, so its real and imaginary parts are
  // commuting real symmetric matrices that share an orthogonal eigenbasis.
  const Mat4 m = ub.transpose() * ub;
  const Eigen::Matrix4d re = m.real();
  const Eigen::Matrix4d im = m.imag();

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  Eigen::Matrix4d basis = Eigen::Matrix4d::Identity();
  double best_off = std::numeric_limits<double>::infinity();
  for (int attempt = 0; attempt < std::max(1, opts.max_attempts); ++attempt) {
    const double a = coeff(rng), b = coeff(rng);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(a * re + b * im);
    const Eigen::Matrix4d p = solver.eigenvectors();
    Mat4 d = p.transpose().cast<Complex>() * m * p.cast<Complex>();
    d.diagonal().setZero();
    const double off = d.cwiseAbs().maxCoeff();
    if (off < best_off) {
      best_off = off;
      basis = p;
    }
    if (best_off < 1e-13) break;
  }
  if (basis.determinant() < 0.0) basis.col(0) *= -1.0;

  const Eigen::Vector4cd eig =
      (basis.transpose().cast<Complex>() * m * basis.cast<Complex>()).diagonal();
  Eigen::Vector4d theta;
  for (int k = 0; k < 4; ++k) theta(k) = 0.5 * std::arg(eig(k));
  // det M = 1 forces sum(theta) = 0 mod pi; make it 0 mod 2pi so the left
  // orthogonal factor lands in SO(4).
  if (std::cos(theta.sum()) < 0.0) theta(0) += kPi;

  Eigen::Vector4cd inv_phases;
  for (int k = 0; k < 4; ++k) inv_phases(k) = std::polar(1.0, -theta(k));
  const Eigen::Matrix4d k1 = (ub * basis.cast<Complex>() * inv_phases.asDiagonal()).real();

  const Mat4 left = q * k1.cast<Complex>() * q.adjoint();
  const Mat4 right = q * basis.transpose().cast<Complex>() * q.adjoint();

  const auto &signs = magic_signs();
  EntanglerCoords raw{-signs.diag[0].dot(theta) / 4.0, -signs.diag[1].dot(theta) / 4.0,
                      -signs.diag[2].dot(theta) / 4.0};
  const double phase_mid = theta.sum() / 4.0;

  const KronFactors post = kron_factor(left);
  const KronFactors pre = kron_factor(right);

  KakFactors out;
  out.phase = wrap_angle(phase0 + phase_mid + post.phase + pre.phase);
  out.post = {post.a, post.b};
  out.pre = {pre.a, pre.b};
  out.coords = raw.wrapped();
  return out;
}

EntanglerCoords weyl_canonicalize(const EntanglerCoords &c) {
  constexpr double kEdge = 1e-12;
  constexpr double kQuarter = kPi / 4.0;
  // Shifts by pi/2 along any axis only multiply A by a local Pauli product.
  auto reduce = [](double v) {
    double r = v - (kPi / 2.0) * std::round(v / (kPi / 2.0));
    if (r <= -kQuarter + kEdge) r += kPi / 2.0;
    return r;
  };
  std::array<double, 3> v{reduce(c.x), reduce(c.y), reduce(c.z)};
  // Axis permutations are local Clifford conjugations.
  std::sort(v.begin(), v.end(),
            [](double a, double b) { return std::abs(a) > std::abs(b); });
  // Flipping the signs of two coordinates at once is local.
  if (v[0] < 0.0) { v[0] = -v[0]; v[2] = -v[2]; }
  if (v[1] < 0.0) { v[1] = -v[1]; v[2] = -v[2]; }
  // On the x = pi/4 face, (x, y, z) ~ (pi/2 - x, y, -z).
  if (v[2] < 0.0 && std::abs(v[0] - kQuarter) < kEdge) {
    v[0] = kPi / 2.0 - v[0];
    v[2] = -v[2];
  }
  return {v[0], v[1], v[2] == 0.0 ? 0.0 : v[2]};
}

}  // namespace qgd
