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

#include "qgd/entangler.hpp"

#include <algorithm>
#include <cmath>

#include "qgd/error.hpp"

namespace qgd {

double wrap_angle(double angle) {
  double r = std::remainder(angle, 2.0 * kPi);  // [-pi, pi]
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

double EntanglerCoords::max_abs_diff(const EntanglerCoords &o) const {
  return std::max({std::abs(x - o.x), std::abs(y - o.y), std::abs(z - o.z)});
}

namespace {

// exp(-i theta P) for an involution P.
Mat4 involution_exp(const Mat4 &p, double theta) {
  return std::cos(theta) * Mat4::Identity() + Complex(0.0, -std::sin(theta)) * p;
}

}  // namespace

Mat4 canonical_entangler(const EntanglerCoords &c) {
  // The three generators commute, so the exponential factorizes.
  return involution_exp(pauli_pair(Axis::X, Axis::X), c.x) *
         involution_exp(pauli_pair(Axis::Y, Axis::Y), c.y) *
         involution_exp(pauli_pair(Axis::Z, Axis::Z), c.z);
}

void SampledProfile::validate() const {
  if (times.empty() || times.size() != values.size())
    throw Error(ErrorCode::InvalidArgument,
                "profile needs matching, non-empty time and value grids");
  for (std::size_t i = 1; i < times.size(); ++i)
    if (!(times[i] >= times[i - 1]))
      throw Error(ErrorCode::InvalidArgument, "profile times must be non-decreasing");
}

double SampledProfile::integral() const {
  validate();
  double total = 0.0;
  for (std::size_t i = 1; i < times.size(); ++i)
    total += 0.5 * (values[i] + values[i - 1]) * (times[i] - times[i - 1]);
  return total;
}

EntanglerCoords coords_from_area(const SampledProfile &j, const SampledProfile &jzz) {
  const double area = j.integral();
  return EntanglerCoords{area, area, jzz.integral()}.wrapped();
}

}  // namespace qgd
