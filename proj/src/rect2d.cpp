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

#include "mvbb/rect2d.hpp"

#include <array>
#include <cmath>
#include <initializer_list>

namespace mvbb {

namespace {

constexpr double kTieTolerance = 1e-12;

Vector2d Perp(const Vector2d& d) { return {-d.y(), d.x()}; }

// Of the four quarter-turn rotations of a unit direction, the one with angle
// in [0, pi/2). Quarter turns are exact in floating point.
Vector2d CanonicalAxis(Vector2d d) {
  for (int r = 0; r < 4; ++r) {
    if (d.x() > 0 && d.y() >= 0) return d;
    d = Perp(d);
  }
  return d;
}

// Rectangle with axis u that is tight on the given support points.
Rect2d TightRect(const Vector2d& u, std::initializer_list<Vector2d> support) {
  Rect2d r;
  r.u = u;
  r.v = Perp(u);
  double ulo = INFINITY, uhi = -INFINITY, vlo = INFINITY, vhi = -INFINITY;
  for (const Vector2d& p : support) {
    const double a = p.dot(r.u);
    const double b = p.dot(r.v);
    ulo = std::min(ulo, a);
    uhi = std::max(uhi, a);
    vlo = std::min(vlo, b);
    vhi = std::max(vhi, b);
  }
  r.center = r.u * (0.5 * (ulo + uhi)) + r.v * (0.5 * (vlo + vhi));
  r.half_extents = {0.5 * (uhi - ulo), 0.5 * (vhi - vlo)};
  return r;
}

bool Better(const Rect2d& cand, double cand_area, const Rect2d& best,
            double best_area) {
  if (!std::isfinite(best_area)) return true;
  const double tie = kTieTolerance * std::max(cand_area, best_area);
  if (cand_area < best_area - tie) return true;
  if (cand_area > best_area + tie) return false;
  const double ca = std::atan2(cand.u.y(), cand.u.x());
  const double ba = std::atan2(best.u.y(), best.u.x());
  if (ca != ba) return ca < ba;
  if (cand.u.x() != best.u.x()) return cand.u.x() < best.u.x();
  return cand.u.y() < best.u.y();
}

}  // namespace

Rect2d MinAreaRectFromHull(const Hull2& hull) {
  const PointSet2& h = hull.vertices;
  const Index m = h.cols();
  if (m == 0) throw GeometryError("empty point set");
  if (m == 1) {
    Rect2d r;
    r.center = h.col(0);
    return r;
  }
  if (m == 2) {
    const Vector2d a = h.col(0), b = h.col(1);
    return TightRect(CanonicalAxis((b - a).normalized()), {a, b});
  }

  auto next = [m](Index i) { return (i + 1) % m; };
  auto edge_dir = [&](Index i) -> Vector2d {
    return (h.col(next(i)) - h.col(i)).normalized();
  };

  // Antipodal pointers for edge 0: max along the edge (hi), max along the
  // inward normal (far), min along the edge (lo).
  Vector2d e = edge_dir(0);
  Vector2d n = Perp(e);
  Index hi = 0, far = 0, lo = 0;
  for (Index i = 1; i < m; ++i) {
    if (h.col(i).dot(e) > h.col(hi).dot(e)) hi = i;
    if (h.col(i).dot(n) > h.col(far).dot(n)) far = i;
    if (h.col(i).dot(e) < h.col(lo).dot(e)) lo = i;
  }

  Rect2d best;
  double best_area = INFINITY;
  for (Index i = 0; i < m; ++i) {
    if (i > 0) {
      e = edge_dir(i);
      n = Perp(e);
      // Each pointer moves forward at most once around the hull in total.
      while (h.col(next(hi)).dot(e) > h.col(hi).dot(e)) hi = next(hi);
      while (h.col(next(far)).dot(n) > h.col(far).dot(n)) far = next(far);
      while (h.col(next(lo)).dot(e) < h.col(lo).dot(e)) lo = next(lo);
    }
    const Rect2d cand =
        TightRect(CanonicalAxis(e), {h.col(i), h.col(next(i)), h.col(hi),
                                     h.col(far), h.col(lo)});
    const double area = cand.Area();
    if (Better(cand, area, best, best_area)) {
      best = cand;
      best_area = area;
    }
  }
  return best;
}

Rect2d MinAreaRect(const PointSet2& points) {
  return MinAreaRectFromHull(ConvexHull2d(points));
}

}  // namespace mvbb
