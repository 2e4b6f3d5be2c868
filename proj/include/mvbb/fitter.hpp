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

#ifndef MVBB_FITTER_HPP
#define MVBB_FITTER_HPP

#include "mvbb/geom_core.hpp"

namespace mvbb {

/// Default denominator of the decimation grid: the grid cell is
/// (1/2) (epsilon / 428) times the constant-factor box.
inline constexpr double kDecimationConstant = 428.0;

/// Minimum-volume box among boxes having one axis parallel to `direction`.
/// The input is projected onto the orthogonal plane, enclosed by its
/// minimum-area rectangle, and extruded between the extreme projections
/// onto `direction`. The returned frame's first axis is the normalized
/// direction.
OrientedBoxd MinBoxAlongDirection(const PointSet& points,
                                  const Vector3d& direction);

/// Axis-aligned bounding box.
OrientedBoxd AxisAlignedBox(const PointSet& points);

/// Linear-time box within a factor 6 sqrt 6 of the optimal volume.
///
/// The first axis joins the longest-axis extreme pair of the input; the
/// second joins the longest-axis extreme pair of the projection onto the
/// plane normal to the first; the third is their cross product. The box is
/// the tightest one in that frame. Collinear input leaves two zero
/// half-extents and planar input one.
OrientedBoxd ConstantFactorBox(const PointSet& points);

struct Decimation {
  PointSet points;
  /// The constant-factor box had zero volume; `points` is the input.
  bool degenerate = false;
};

/// Replaces the input by grid points whose hull contains the input's hull.
///
/// The grid is aligned with ConstantFactorBox, anchored at its minimal
/// corner, with cells of (epsilon / constant) times its half sides. Every
/// input point contributes the 8 corners of its cell; of those, only the two
/// extremes of each column along the box's third axis are kept.
///
/// Requires 0 < epsilon <= 1 and constant > 0.
Decimation DecimateGrid(const PointSet& points, double epsilon,
                        double constant = kDecimationConstant);

}  // namespace mvbb

#endif  // MVBB_FITTER_HPP
