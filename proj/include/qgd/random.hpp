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

#include <random>

#include "qgd/qmat.hpp"

namespace qgd {

using Rng = std::mt19937_64;

/// Haar-distributed element of U(4): QR of a complex Gaussian matrix with
/// the phases of R's diagonal folded back into Q.
Mat4 haar_unitary(Rng &rng);

/// Haar-distributed element of SU(2).
Mat2 random_su2(Rng &rng);

/// Random Hermitian 4x4 matrix with Gaussian entries.
Mat4 random_hermitian(Rng &rng, double scale = 1.0);

}  // namespace qgd
