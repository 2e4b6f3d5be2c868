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

#ifndef MVBB_DIAMETER_HPP
#define MVBB_DIAMETER_HPP

#include "mvbb/geom_core.hpp"

namespace mvbb {

/// A pair of input points, by column index, and their distance.
struct PointPair {
  Index s = 0;
  Index t = 0;
  double length = 0;
};

/// Exact diameter by scanning all pairs. Ties keep the first pair in
/// (i, j) index order. Quadratic; meant as a reference for small inputs.
PointPair DiameterExact(const PointSet& points);

/// Points realizing the minimum and maximum along the longest side of the
/// axis-aligned bounding box (lowest axis index on ties, first occurrence of
/// each extreme). Satisfies |st| <= D(S) <= sqrt(dim) |st|. Linear time.
template <int Dim>
PointPair DiameterLongestAxis(
    const Eigen::Matrix<double, Dim, Eigen::Dynamic>& points) {
  if (points.cols() == 0) throw GeometryError("empty point set");
  const auto extent =
      (points.rowwise().maxCoeff() - points.rowwise().minCoeff()).eval();
  Index axis = 0;
  for (Index r = 1; r < Dim; ++r) {
    if (extent[r] > extent[axis]) axis = r;
  }
  PointPair p;
  for (Index i = 1; i < points.cols(); ++i) {
    if (points(axis, i) < points(axis, p.s)) p.s = i;
    if (points(axis, i) > points(axis, p.t)) p.t = i;
  }
  p.length = (points.col(p.t) - points.col(p.s)).norm();
  return p;
}

inline PointPair DiameterSqrt3(const PointSet& points) {
  return DiameterLongestAxis<3>(points);
}

/// (1 - epsilon)-approximate diameter. Points are snapped to the nearest
/// vertex of a grid whose cell is (epsilon / (2 sqrt 3)) times the bounding
/// box; snapped points interior to a grid column along any axis are dropped
/// and the remainder is scanned exhaustively. The result is a pair of input
/// points (the first-seen witness of each snapped vertex).
///
/// Requires 0 < epsilon <= 1.
PointPair DiameterGridEps(const PointSet& points, double epsilon);

}  // namespace mvbb

#endif  // MVBB_DIAMETER_HPP
