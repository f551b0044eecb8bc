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

#include "qgd/random.hpp"

#include <cmath>

namespace qgd {

namespace {

template <int N>
Eigen::Matrix<Complex, N, N> haar(Rng &rng) {
  using Mat = Eigen::Matrix<Complex, N, N>;
  std::normal_distribution<double> normal(0.0, 1.0);
  Mat a;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) a(i, j) = Complex(normal(rng), normal(rng));
  Eigen::HouseholderQR<Mat> qr(a);
  Mat q = qr.householderQ();
  const Mat r = qr.matrixQR().template triangularView<Eigen::Upper>();
  for (int k = 0; k < N; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

}  // namespace

Mat4 haar_unitary(Rng &rng) { return haar<4>(rng); }

Mat2 random_su2(Rng &rng) {
  Mat2 u = haar<2>(rng);
  return u / std::sqrt(u.determinant());
}

Mat4 random_hermitian(Rng &rng, double scale) {
  std::normal_distribution<double> normal(0.0, scale);
  Mat4 a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = Complex(normal(rng), normal(rng));
  return 0.5 * (a + a.adjoint());
}

}  // namespace qgd
