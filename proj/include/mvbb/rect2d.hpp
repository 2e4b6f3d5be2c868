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

#ifndef MVBB_RECT2D_HPP
#define MVBB_RECT2D_HPP

#include "mvbb/geom_core.hpp"
#include "mvbb/hull.hpp"

namespace mvbb {

/// Minimum-area enclosing rectangle of a planar point set.
///
/// One side of the result is flush with a hull edge. `u` is the rectangle
/// axis whose angle against +x lies in [0, pi/2) and `v` is `u` rotated by
/// +90 degrees; `half_extents` follow (u, v). Among candidates whose areas
/// agree to a relative 1e-12, the one with the smallest angle of `u` wins,
/// then the lexicographically smallest `u`.
///
/// Coincident input yields a zero-area rectangle at the point; collinear
/// input yields a segment rectangle with one zero half-extent.
Rect2d MinAreaRect(const PointSet2& points);

/// Same result as MinAreaRect on the hull's vertices, in time linear in the
/// hull size.
Rect2d MinAreaRectFromHull(const Hull2& hull);

}  // namespace mvbb

#endif  // MVBB_RECT2D_HPP
