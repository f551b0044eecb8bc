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

// Local equivalence of two-qubit gates: Makhlin invariants, the KAK
// factorization U = e^{i phase} (a1 (x) b1) A(x, y, z) (a2 (x) b2), and
// Weyl-chamber normal form for entangler coordinates.

#include <cstdint>

#include "qgd/entangler.hpp"
#include "qgd/qmat.hpp"

namespace qgd {

/// Bell-type change of basis in which SU(2) (x) SU(2) becomes SO(4):
/// Q = 1/sqrt2 [[1,0,0,i],[0,i,1,0],[0,i,-1,0],[1,0,0,-i]].
const Mat4 &magic_basis();

struct MakhlinInvariants {
  Complex g1;
  double g2 = 0.0;
  /// Imaginary part of the computed G2; zero up to rounding for unitary input.
  double g2_imag_residual = 0.0;
};

/// With m = (Q^dag U Q)^T (Q^dag U Q):
///   G1 = tr(m)^2 / (16 det U),  G2 = (tr(m)^2 - tr(m^2)) / (4 det U).
/// Throws Error{NotUnitary}.
MakhlinInvariants makhlin_invariants(const Mat4 &u);

/// max(|G1 - G1'|, |G2 - G2'|).
double invariant_distance(const MakhlinInvariants &a, const MakhlinInvariants &b);

bool locally_equivalent(const Mat4 &u, const Mat4 &v, double tol = 1e-9);

/// A single-qubit factor for each qubit, acting as first (x) second.
struct LocalPair {
  Mat2 first = Mat2::Identity();
  Mat2 second = Mat2::Identity();

  Mat4 matrix() const { return kron(first, second); }
};

struct KakFactors {
  double phase = 0.0;
  LocalPair post;
  EntanglerCoords coords;
  LocalPair pre;

  /// e^{i phase} post A(coords) pre.
  Mat4 reconstruct() const;
};

struct KakOptions {
  /// Seeds the random real combinations used to diagonalize the symmetric
  /// magic-basis matrix when its spectrum is degenerate.
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
  int max_attempts = 64;
};

/// Throws Error{NotUnitary}. Coordinates are returned in the principal cell
/// (-pi, pi]^3 without restriction to the Weyl chamber.
KakFactors kak_decompose(const Mat4 &u, const KakOptions &opts = {});

/// Splits a matrix in U(2) (x) U(2) as e^{i phase} (a (x) b) with a, b in
/// SU(2). The residual |m - e^{i phase} a (x) b|_max is returned for
/// callers that need to check the input really was a product.
struct KronFactors {
  double phase = 0.0;
  Mat2 a;
  Mat2 b;
  double residual = 0.0;
};
KronFactors kron_factor(const Mat4 &m);

/// Weyl-chamber representative: pi/4 >= x >= y >= |z|, with z >= 0 when
/// x = pi/4. Idempotent and invariant-preserving.
EntanglerCoords weyl_canonicalize(const EntanglerCoords &c);

}  // namespace qgd
