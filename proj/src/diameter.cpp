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

#include "mvbb/diameter.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

namespace mvbb {

PointPair DiameterExact(const PointSet& points) {
  const Index n = points.cols();
  if (n == 0) throw GeometryError("empty point set");
  PointPair best;
  double best_sq = 0;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const double d = (points.col(i) - points.col(j)).squaredNorm();
      if (d > best_sq) {
        best_sq = d;
        best.s = i;
        best.t = j;
      }
    }
  }
  best.length = std::sqrt(best_sq);
  return best;
}

PointPair DiameterGridEps(const PointSet& points, double epsilon) {
  const Index n = points.cols();
  if (n == 0) throw GeometryError("empty point set");
  if (!(epsilon > 0 && epsilon <= 1)) {
    throw GeometryError("epsilon must lie in (0, 1]");
  }
  const Vector3d lo = points.rowwise().minCoeff();
  const Vector3d cell =
      (points.rowwise().maxCoeff() - lo) * (epsilon / (2 * std::sqrt(3.0)));
  if (cell.isZero(0)) return {0, 0, 0};

  using Key = std::array<std::int64_t, 3>;
  std::map<Key, std::size_t> slot;
  std::vector<Key> keys;
  std::vector<Index> witness;
  for (Index i = 0; i < n; ++i) {
    Key k{};
    for (int a = 0; a < 3; ++a) {
      k[a] = cell[a] > 0
                 ? std::llround((points(a, i) - lo[a]) / cell[a])
                 : 0;
    }
    if (slot.try_emplace(k, keys.size()).second) {
      keys.push_back(k);
      witness.push_back(i);
    }
  }

  // A snapped point strictly inside its column along some axis cannot be a
  // hull vertex of the snapped set, so it cannot realize its diameter.
  std::vector<char> keep(keys.size(), 1);
  for (int a = 0; a < 3; ++a) {
    const int b = (a + 1) % 3, c = (a + 2) % 3;
    std::map<std::array<std::int64_t, 2>, std::pair<std::size_t, std::size_t>>
        columns;
    for (std::size_t s = 0; s < keys.size(); ++s) {
      auto [it, fresh] =
          columns.try_emplace({keys[s][b], keys[s][c]}, s, s);
      if (fresh) continue;
      auto& [mn, mx] = it->second;
      if (keys[s][a] < keys[mn][a]) mn = s;
      if (keys[s][a] > keys[mx][a]) mx = s;
    }
    for (std::size_t s = 0; s < keys.size(); ++s) {
      const auto& [mn, mx] = columns.at({keys[s][b], keys[s][c]});
      if (s != mn && s != mx) keep[s] = 0;
    }
  }

  std::vector<std::size_t> reduced;
  for (std::size_t s = 0; s < keys.size(); ++s) {
    if (keep[s]) reduced.push_back(s);
  }
  auto snapped = [&](std::size_t s) {
    return Vector3d(lo[0] + keys[s][0] * cell[0], lo[1] + keys[s][1] * cell[1],
                    lo[2] + keys[s][2] * cell[2]);
  };
  std::size_t bs = reduced.front(), bt = reduced.front();
  double best_sq = -1;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    const Vector3d p = snapped(reduced[i]);
    for (std::size_t j = i + 1; j < reduced.size(); ++j) {
      const double d = (p - snapped(reduced[j])).squaredNorm();
      if (d > best_sq) {
        best_sq = d;
        bs = reduced[i];
        bt = reduced[j];
      }
    }
  }
  PointPair out;
  out.s = witness[bs];
  out.t = witness[bt];
  out.length = (points.col(out.s) - points.col(out.t)).norm();
  return out;
}

}  // namespace mvbb
