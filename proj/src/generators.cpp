// Copyright 2026 The mvbb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mvbb/generators.hpp"

namespace mvbb {

Eigen::Matrix3d RandomRotation(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Eigen::Quaterniond q;
  do {
    q = Eigen::Quaterniond(gauss(rng), gauss(rng), gauss(rng), gauss(rng));
  } while (q.norm() < 1e-6);
  return q.normalized().toRotationMatrix();
}

PointSet Paper4(std::uint64_t rotate_seed) {
  PointSet s(3, 4);
  s << -1, -1, 1, 1,
       -0.1, 0.1, 0, 0,
       0, 0, -0.1, 0.1;
  if (rotate_seed == 0) return s;
  std::mt19937_64 rng(rotate_seed);
  return RandomRotation(rng) * s;
}

PointSet SpherePoints(Index n, std::uint64_t seed) {
  if (n < 0) throw GeometryError("point count must be >= 0");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  PointSet out(3, n);
  for (Index i = 0; i < n; ++i) {
    Vector3d p;
    do {
      p = Vector3d(gauss(rng), gauss(rng), gauss(rng));
    } while (p.norm() < 1e-9);
    out.col(i) = p.normalized();
  }
  return out;
}

PointSet RotatedBoxPoints(double a, double b, double c, Index n,
                          std::uint64_t seed) {
  if (n < 8) throw GeometryError("a rotated box needs at least 8 points");
  if (!(a >= 0 && b >= 0 && c >= 0)) {
    throw GeometryError("box sides must be non-negative");
  }
  std::mt19937_64 rng(seed);
  const Vector3d half(a / 2, b / 2, c / 2);
  PointSet local(3, n);
  for (int k = 0; k < 8; ++k) {
    local.col(k) = Vector3d(k & 1 ? 1 : -1, k & 2 ? 1 : -1, k & 4 ? 1 : -1)
                       .cwiseProduct(half);
  }
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (Index i = 8; i < n; ++i) {
    local.col(i) = Vector3d(unit(rng), unit(rng), unit(rng)).cwiseProduct(half);
  }
  return RandomRotation(rng) * local;
}

}  // namespace mvbb
