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

#include "mvbb/fitter.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "mvbb/diameter.hpp"
#include "mvbb/rect2d.hpp"

namespace mvbb {

OrientedBoxd MinBoxAlongDirection(const PointSet& points,
                                  const Vector3d& direction) {
  if (points.cols() == 0) throw GeometryError("empty point set");
  auto [w1, w2] = OrthonormalComplement(direction);
  Eigen::Matrix<double, 2, 3> basis;
  basis.row(0) = w1.transpose();
  basis.row(1) = w2.transpose();
  const Rect2d rect = MinAreaRect(basis * points);
  const Vector3d side = rect.u.x() * w1 + rect.u.y() * w2;
  return ShrinkToFit(points, Frame3d::FromTwoAxes(direction, side));
}

OrientedBoxd AxisAlignedBox(const PointSet& points) {
  return ShrinkToFit(points, Frame3d::Identity());
}

OrientedBoxd ConstantFactorBox(const PointSet& points) {
  const PointPair st = DiameterSqrt3(points);
  if (!(st.length > 0)) return AxisAlignedBox(points);
  const Vector3d axis =
      (points.col(st.t) - points.col(st.s)) / st.length;
  auto [w1, w2] = OrthonormalComplement(axis);

  Eigen::Matrix<double, 2, 3> basis;
  basis.row(0) = w1.transpose();
  basis.row(1) = w2.transpose();
  const PointSet2 projected = basis * points;
  const PointPair st2 = DiameterLongestAxis<2>(projected);
  Vector3d second = w1;
  if (st2.length > 0) {
    const Vector2d d =
        (projected.col(st2.t) - projected.col(st2.s)) / st2.length;
    second = d.x() * w1 + d.y() * w2;
  }
  return ShrinkToFit(points, Frame3d::FromTwoAxes(axis, second));
}

Decimation DecimateGrid(const PointSet& points, double epsilon,
                        double constant) {
  if (points.cols() == 0) throw GeometryError("empty point set");
  if (!(epsilon > 0 && epsilon <= 1)) {
    throw GeometryError("epsilon must lie in (0, 1]");
  }
  if (!(constant > 0)) throw GeometryError("decimation constant must be > 0");

  const OrientedBoxd box = ConstantFactorBox(points);
  const Vector3d& h = box.half_extents;
  if (!(h.minCoeff() > 1e-12 * h.maxCoeff())) return {points, true};

  const Eigen::Matrix3d& axes = box.frame.axes();
  const PointSet local = axes.transpose() * points;
  const Vector3d lo = local.rowwise().minCoeff();
  const Vector3d cell = h * (epsilon / constant);

  using Key = std::array<std::int64_t, 3>;
  std::vector<Key> corners;
  corners.reserve(8 * static_cast<std::size_t>(points.cols()));
  for (Index i = 0; i < points.cols(); ++i) {
    Key base{};
    for (int a = 0; a < 3; ++a) {
      base[a] = static_cast<std::int64_t>(
          std::floor((local(a, i) - lo[a]) / cell[a]));
    }
    for (int c = 0; c < 8; ++c) {
      corners.push_back({base[0] + (c & 1), base[1] + ((c >> 1) & 1),
                         base[2] + ((c >> 2) & 1)});
    }
  }
  std::sort(corners.begin(), corners.end());
  corners.erase(std::unique(corners.begin(), corners.end()), corners.end());

  // Sorted order groups each (i, j) column with k increasing; keep its ends.
  std::vector<Key> kept;
  for (std::size_t s = 0; s < corners.size();) {
    std::size_t e = s;
    while (e + 1 < corners.size() && corners[e + 1][0] == corners[s][0] &&
           corners[e + 1][1] == corners[s][1]) {
      ++e;
    }
    kept.push_back(corners[s]);
    if (e != s) kept.push_back(corners[e]);
    s = e + 1;
  }

  Decimation out;
  out.points.resize(3, static_cast<Index>(kept.size()));
  for (std::size_t s = 0; s < kept.size(); ++s) {
    const Vector3d q(lo[0] + kept[s][0] * cell[0], lo[1] + kept[s][1] * cell[1],
                     lo[2] + kept[s][2] * cell[2]);
    out.points.col(static_cast<Index>(s)) = axes * q;
  }
  return out;
}

}  // namespace mvbb
