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

#include "mvbb/hull.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

namespace mvbb {

namespace {

double Cross2(const Vector2d& o, const Vector2d& a, const Vector2d& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

// Strict left turn o -> a -> b, with the turn's sine required to exceed the
// orientation epsilon.
bool LeftTurn(const Vector2d& o, const Vector2d& a, const Vector2d& b) {
  const double scale = (a - o).norm() * (b - o).norm();
  return Cross2(o, a, b) > kOrientationEps * scale;
}

}  // namespace

double Hull2::Area() const {
  double twice = 0;
  const Index m = vertices.cols();
  for (Index i = 0; i < m; ++i) {
    const Vector2d a = vertices.col(i);
    const Vector2d b = vertices.col((i + 1) % m);
    twice += a.x() * b.y() - a.y() * b.x();
  }
  return 0.5 * twice;
}

Hull2 ConvexHull2d(const PointSet2& points) {
  const Index n = points.cols();
  if (n == 0) throw GeometryError("empty point set");

  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    if (points(0, a) != points(0, b)) return points(0, a) < points(0, b);
    return points(1, a) < points(1, b);
  });
  // Exact duplicates keep their first occurrence.
  order.erase(std::unique(order.begin(), order.end(),
                          [&](Index a, Index b) {
                            return points.col(a) == points.col(b);
                          }),
              order.end());

  std::vector<Index> chain;
  if (order.size() < 3) {
    chain = order;
  } else {
    chain.resize(2 * order.size());
    std::size_t k = 0;
    auto col = [&](Index i) -> Vector2d { return points.col(i); };
    for (Index idx : order) {
      while (k >= 2 && !LeftTurn(col(chain[k - 2]), col(chain[k - 1]),
                                 col(idx))) {
        --k;
      }
      chain[k++] = idx;
    }
    const std::size_t lower = k + 1;
    for (auto it = order.rbegin() + 1; it != order.rend(); ++it) {
      while (k >= lower && !LeftTurn(col(chain[k - 2]), col(chain[k - 1]),
                                     col(*it))) {
        --k;
      }
      chain[k++] = *it;
    }
    chain.resize(k - 1);
  }

  Hull2 hull;
  hull.indices = chain;
  hull.vertices.resize(2, static_cast<Index>(chain.size()));
  for (std::size_t i = 0; i < chain.size(); ++i) {
    hull.vertices.col(static_cast<Index>(i)) = points.col(chain[i]);
  }
  return hull;
}

std::pair<Vector3d, double> Hull3::Plane(std::size_t f) const {
  const Vector3d a = vertices.col(faces[f][0]);
  const Vector3d b = vertices.col(faces[f][1]);
  const Vector3d c = vertices.col(faces[f][2]);
  const Vector3d n = (b - a).cross(c - a).normalized();
  return {n, n.dot(a)};
}

bool Hull3::Contains(const Vector3d& p, double tol) const {
  if (dimension == 3) {
    for (std::size_t f = 0; f < faces.size(); ++f) {
      auto [n, d] = Plane(f);
      if (n.dot(p) - d > tol) return false;
    }
    return true;
  }
  if (vertices.cols() == 0) return false;
  const Vector3d o = vertices.col(0);
  if (dimension == 0) return (p - o).norm() <= tol;
  const Vector3d dir = (vertices.col(1) - o).normalized();
  if (dimension == 1) return (p - o).cross(dir).norm() <= tol;
  // Planar: any non-collinear triple gives the carrier plane.
  Vector3d normal = Vector3d::Zero();
  for (Index i = 2; i < vertices.cols(); ++i) {
    const Vector3d c = dir.cross(vertices.col(i) - o);
    if (c.norm() > normal.norm()) normal = c;
  }
  return std::abs(normal.normalized().dot(p - o)) <= tol;
}

namespace {

// Incremental quickhull over input column indices. Faces carry their
// adjacency: adj[i] is the face across edge (v[i], v[i+1]).
class QuickHull {
 public:
  explicit QuickHull(const PointSet& points) : pts_(points) {
    double mag = 0;
    for (int r = 0; r < 3; ++r) mag += pts_.row(r).cwiseAbs().maxCoeff();
    eps_ = kOrientationEps * std::max(mag, 1e-300);
  }

  Hull3 Run();

 private:
  struct Face {
    std::array<Index, 3> v;
    std::array<int, 3> adj{-1, -1, -1};
    Vector3d normal;
    double offset = 0;
    std::vector<Index> outside;
    Index furthest = -1;
    double furthest_dist = 0;
    bool alive = true;
  };

  struct HorizonEdge {
    Index a, b;
    int face;       // non-visible neighbour
    int face_edge;  // index of the shared edge within `face`
  };

  Vector3d P(Index i) const { return pts_.col(i); }
  double Distance(const Face& f, Index i) const {
    return f.normal.dot(P(i)) - f.offset;
  }

  int AddFace(Index a, Index b, Index c) {
    Face f;
    f.v = {a, b, c};
    f.normal = (P(b) - P(a)).cross(P(c) - P(a));
    const double len = f.normal.norm();
    if (len > 0) f.normal /= len;
    f.offset = f.normal.dot(P(a));
    faces_.push_back(std::move(f));
    visit_.push_back(0);
    return static_cast<int>(faces_.size()) - 1;
  }

  void Assign(const std::vector<int>& candidates,
              const std::vector<Index>& point_ids) {
    for (Index i : point_ids) {
      for (int fi : candidates) {
        Face& f = faces_[fi];
        const double d = Distance(f, i);
        if (d > eps_) {
          f.outside.push_back(i);
          if (f.furthest < 0 || d > f.furthest_dist) {
            f.furthest = i;
            f.furthest_dist = d;
          }
          break;
        }
      }
    }
  }

  Hull3 Degenerate(int dimension, std::vector<Index> ids) const;
  Hull3 PlanarHull(Index i0, Index i1, Index i2) const;
  void AddPoint(int face_id);

  const PointSet& pts_;
  double eps_;
  std::vector<Face> faces_;
  std::vector<int> visit_;  // 0 unseen, 1 visible, 2 hidden in this round
  std::vector<int> touched_;
};

Hull3 QuickHull::Degenerate(int dimension, std::vector<Index> ids) const {
  Hull3 h;
  h.dimension = dimension;
  h.indices = std::move(ids);
  h.vertices.resize(3, static_cast<Index>(h.indices.size()));
  for (std::size_t i = 0; i < h.indices.size(); ++i) {
    h.vertices.col(static_cast<Index>(i)) = P(h.indices[i]);
  }
  return h;
}

Hull3 QuickHull::PlanarHull(Index i0, Index i1, Index i2) const {
  const Vector3d normal = (P(i1) - P(i0)).cross(P(i2) - P(i0));
  const PointSet2 flat = ProjectToPlane(pts_, normal);
  const Hull2 h2 = ConvexHull2d(flat);
  return Degenerate(2, h2.indices);
}

void QuickHull::AddPoint(int face_id) {
  const Index eye = faces_[face_id].furthest;
  const Vector3d e = P(eye);

  for (int f : touched_) visit_[f] = 0;
  touched_.clear();

  // Depth-first walk over visible faces; hidden neighbours contribute
  // horizon edges in loop order.
  std::vector<int> visible;
  std::vector<HorizonEdge> horizon;
  struct Visit {
    int face;
    int entry;
    int step;
  };
  std::vector<Visit> stack;
  visit_[face_id] = 1;
  touched_.push_back(face_id);
  visible.push_back(face_id);
  stack.push_back({face_id, 0, 0});
  while (!stack.empty()) {
    Visit& top = stack.back();
    if (top.step == 3) {
      stack.pop_back();
      continue;
    }
    const int edge = (top.entry + top.step) % 3;
    ++top.step;
    const Face& f = faces_[top.face];
    const int nb = f.adj[edge];
    if (visit_[nb] == 1) continue;
    if (visit_[nb] == 0) {
      touched_.push_back(nb);
      const bool sees = faces_[nb].normal.dot(e) - faces_[nb].offset > eps_;
      visit_[nb] = sees ? 1 : 2;
      if (sees) {
        visible.push_back(nb);
        int back = 0;
        while (faces_[nb].adj[back] != top.face) ++back;
        stack.push_back({nb, back, 1});
        continue;
      }
    }
    const Index a = f.v[edge];
    const Index b = f.v[(edge + 1) % 3];
    int back = 0;
    while (!(faces_[nb].v[back] == b && faces_[nb].v[(back + 1) % 3] == a)) {
      ++back;
    }
    horizon.push_back({a, b, nb, back});
  }

  std::vector<int> created;
  created.reserve(horizon.size());
  std::unordered_map<Index, int> starts_at;
  for (const HorizonEdge& h : horizon) {
    const int nf = AddFace(h.a, h.b, eye);
    faces_[nf].adj[0] = h.face;
    faces_[h.face].adj[h.face_edge] = nf;
    starts_at[h.a] = nf;
    created.push_back(nf);
  }
  for (int nf : created) {
    const int next = starts_at.at(faces_[nf].v[1]);
    faces_[nf].adj[1] = next;
    faces_[next].adj[2] = nf;
  }

  std::vector<Index> orphans;
  for (int f : visible) {
    Face& face = faces_[f];
    face.alive = false;
    for (Index i : face.outside) {
      if (i != eye) orphans.push_back(i);
    }
    face.outside.clear();
    face.outside.shrink_to_fit();
  }
  Assign(created, orphans);
}

Hull3 QuickHull::Run() {
  const Index n = pts_.cols();

  // Initial simplex from the axis extremes.
  std::vector<Index> extremes;
  for (int r = 0; r < 3; ++r) {
    Index lo = 0, hi = 0;
    for (Index i = 1; i < n; ++i) {
      if (pts_(r, i) < pts_(r, lo)) lo = i;
      if (pts_(r, i) > pts_(r, hi)) hi = i;
    }
    extremes.push_back(lo);
    extremes.push_back(hi);
  }
  Index i0 = 0, i1 = 0;
  double best = -1;
  for (std::size_t a = 0; a < extremes.size(); ++a) {
    for (std::size_t b = a + 1; b < extremes.size(); ++b) {
      const double d = (P(extremes[a]) - P(extremes[b])).squaredNorm();
      if (d > best) {
        best = d;
        i0 = extremes[a];
        i1 = extremes[b];
      }
    }
  }
  if (std::sqrt(best) <= eps_) return Degenerate(0, {std::min(i0, i1)});

  const Vector3d dir = (P(i1) - P(i0)).normalized();
  Index i2 = -1;
  best = eps_;
  for (Index i = 0; i < n; ++i) {
    const double d = (P(i) - P(i0)).cross(dir).norm();
    if (d > best) {
      best = d;
      i2 = i;
    }
  }
  if (i2 < 0) {
    Index lo = 0, hi = 0;
    for (Index i = 1; i < n; ++i) {
      const double t = dir.dot(P(i));
      if (t < dir.dot(P(lo))) lo = i;
      if (t > dir.dot(P(hi))) hi = i;
    }
    return Degenerate(1, {std::min(lo, hi), std::max(lo, hi)});
  }

  const Vector3d normal = (P(i1) - P(i0)).cross(P(i2) - P(i0)).normalized();
  Index i3 = -1;
  best = eps_;
  for (Index i = 0; i < n; ++i) {
    const double d = std::abs(normal.dot(P(i) - P(i0)));
    if (d > best) {
      best = d;
      i3 = i;
    }
  }
  if (i3 < 0) return PlanarHull(i0, i1, i2);

  // Orient so that i3 lies below the plane of (i0, i1, i2).
  if (normal.dot(P(i3) - P(i0)) > 0) std::swap(i1, i2);
  AddFace(i0, i1, i2);
  AddFace(i0, i3, i1);
  AddFace(i1, i3, i2);
  AddFace(i2, i3, i0);
  std::map<std::pair<Index, Index>, std::pair<int, int>> edge_owner;
  for (int f = 0; f < 4; ++f) {
    for (int k = 0; k < 3; ++k) {
      edge_owner[{faces_[f].v[k], faces_[f].v[(k + 1) % 3]}] = {f, k};
    }
  }
  for (int f = 0; f < 4; ++f) {
    for (int k = 0; k < 3; ++k) {
      faces_[f].adj[k] =
          edge_owner.at({faces_[f].v[(k + 1) % 3], faces_[f].v[k]}).first;
    }
  }

  std::vector<Index> rest;
  rest.reserve(n);
  for (Index i = 0; i < n; ++i) {
    if (i != i0 && i != i1 && i != i2 && i != i3) rest.push_back(i);
  }
  Assign({0, 1, 2, 3}, rest);

  for (std::size_t f = 0; f < faces_.size(); ++f) {
    if (faces_[f].alive && !faces_[f].outside.empty()) {
      AddPoint(static_cast<int>(f));
    }
  }

  // Compact to the vertices actually referenced, in input order.
  std::vector<Index> used;
  for (const Face& f : faces_) {
    if (!f.alive) continue;
    used.insert(used.end(), f.v.begin(), f.v.end());
  }
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::unordered_map<Index, int> slot;
  for (std::size_t i = 0; i < used.size(); ++i) {
    slot[used[i]] = static_cast<int>(i);
  }

  Hull3 hull = Degenerate(3, used);
  for (const Face& f : faces_) {
    if (!f.alive) continue;
    hull.faces.push_back({slot[f.v[0]], slot[f.v[1]], slot[f.v[2]]});
  }
  return hull;
}

}  // namespace

Hull3 ConvexHull3d(const PointSet& points) {
  if (points.cols() == 0) throw GeometryError("empty point set");
  return QuickHull(points).Run();
}

double HullVolume(const Hull3& hull) {
  if (hull.degenerate()) return 0;
  const Vector3d c = hull.vertices.rowwise().mean();
  double six = 0;
  for (const auto& f : hull.faces) {
    const Vector3d a = hull.vertices.col(f[0]) - c;
    const Vector3d b = hull.vertices.col(f[1]) - c;
    const Vector3d d = hull.vertices.col(f[2]) - c;
    six += a.dot(b.cross(d));
  }
  return std::max(0.0, six / 6.0);
}

}  // namespace mvbb
