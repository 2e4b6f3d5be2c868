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

#include "mvbb/oracle.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>

#include "mvbb/hull.hpp"

namespace mvbb {

namespace {

double VanDerCorput(std::uint64_t i) {
  double x = 0, f = 0.5;
  while (i) {
    if (i & 1) x += f;
    i >>= 1;
    f *= 0.5;
  }
  return x;
}

}  // namespace

PointSet HemisphereDirections(Index count, DirectionSequence sequence) {
  if (count < 1) throw GeometryError("sample count must be >= 1");
  const double golden_angle =
      2 * std::numbers::pi * (1 - 1 / std::numbers::phi);
  PointSet out(3, count);
  for (Index i = 0; i < count; ++i) {
    const double z =
        sequence == DirectionSequence::kFibonacciLattice
            ? 1 - (static_cast<double>(i) + 0.5) / static_cast<double>(count)
            : 1 - VanDerCorput(static_cast<std::uint64_t>(i));
    const double r = std::sqrt(std::max(0.0, 1 - z * z));
    const double phi = golden_angle * static_cast<double>(i);
    out.col(i) = Vector3d(r * std::cos(phi), r * std::sin(phi), z);
  }
  return out;
}

SearchResult DenseRotationBox(const PointSet& points, Index samples,
                              DirectionSequence sequence,
                              const SweepOptions& options) {
  if (points.cols() == 0) throw GeometryError("empty point set");
  DirectionGrid sweep;
  sweep.directions = HemisphereDirections(samples, sequence);
  return GridSearch(points, sweep, options);
}

double LowerBoundVolume(const PointSet& points) {
  return HullVolume(ConvexHull3d(points));
}

}  // namespace mvbb
