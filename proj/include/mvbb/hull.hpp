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

#ifndef MVBB_HULL_HPP
#define MVBB_HULL_HPP

#include <array>
#include <vector>

#include "mvbb/geom_core.hpp"

namespace mvbb {

/// Relative tolerance for orientation predicates; scaled by the largest
/// absolute coordinate of the input.
inline constexpr double kOrientationEps = 1e-12;

/// Planar convex hull. Vertices are counter-clockwise, in strictly convex
/// position, starting from the lexicographically smallest point.
struct Hull2 {
  PointSet2 vertices;
  std::vector<Index> indices;  // column of each vertex in the input

  Index size() const { return vertices.cols(); }
  /// Fewer than three vertices: a point or a segment.
  bool degenerate() const { return vertices.cols() < 3; }
  double Area() const;
};

/// Spatial convex hull as an outward-oriented triangle mesh.
///
/// When the input has affine dimension below three, `faces` is empty and
/// `vertices` holds the hull of the lower-dimensional set: one point, the
/// two ends of a segment, or the vertices of the planar polygon.
struct Hull3 {
  PointSet vertices;
  std::vector<Index> indices;  // column of each vertex in the input
  std::vector<std::array<int, 3>> faces;
  int dimension = 3;

  Index size() const { return vertices.cols(); }
  bool degenerate() const { return dimension < 3; }
  bool planar() const { return dimension == 2; }

  /// Outward unit normal and offset of face f (n . x <= offset inside).
  std::pair<Vector3d, double> Plane(std::size_t f) const;

  /// True when p is inside every face half-space within `tol`. For a
  /// degenerate hull this only checks the carrying flat, not the extent.
  bool Contains(const Vector3d& p, double tol) const;
};

Hull2 ConvexHull2d(const PointSet2& points);
Hull3 ConvexHull3d(const PointSet& points);

/// Volume of a hull, via signed tetrahedra from the vertex centroid; zero
/// for degenerate hulls.
double HullVolume(const Hull3& hull);

}  // namespace mvbb

#endif  // MVBB_HULL_HPP
