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

#include "mvbb/search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <thread>

#include "mvbb/hull.hpp"

namespace mvbb {

namespace {

struct Candidate {
  OrientedBoxd box;
  double volume = std::numeric_limits<double>::infinity();
  Index index = -1;

  // Smaller volume first, then earlier direction.
  bool BeatenBy(const Candidate& other) const {
    if (other.index < 0) return false;
    if (index < 0) return true;
    if (other.volume != volume) return other.volume < volume;
    return other.index < index;
  }
};

Candidate SweepRange(const PointSet& support, const PointSet& directions,
                     Index begin, Index end) {
  Candidate best;
  for (Index i = begin; i < end; ++i) {
    Candidate c;
    c.box = MinBoxAlongDirection(support, directions.col(i));
    c.volume = c.box.Volume();
    c.index = i;
    if (best.BeatenBy(c)) best = std::move(c);
  }
  return best;
}

// Minimum over all direction columns; the reduction only depends on
// (volume, column index), so the thread count does not change the answer.
Candidate Sweep(const PointSet& support, const PointSet& directions,
                const SweepOptions& options) {
  const Index n = directions.cols();
  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<Index>(threads, std::max<Index>(1, n / 64)));
  if (threads <= 1) return SweepRange(support, directions, 0, n);

  std::vector<Candidate> partial(threads);
  std::vector<std::thread> pool;
  const Index chunk = (n + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const Index b = std::min(n, t * chunk);
    const Index e = std::min(n, b + chunk);
    pool.emplace_back([&, t, b, e] {
      partial[t] = SweepRange(support, directions, b, e);
    });
  }
  for (auto& th : pool) th.join();
  Candidate best;
  for (auto& c : partial) {
    if (best.BeatenBy(c)) best = std::move(c);
  }
  return best;
}

int Gcd3(int a, int b, int c) {
  return std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c));
}

SearchResult SweepToResult(const PointSet& points, const PointSet& support,
                           const PointSet& directions,
                           const SweepOptions& options) {
  SearchResult out;
  if (directions.cols() == 0) {
    out.box = AxisAlignedBox(points);
    return out;
  }
  const Candidate best = Sweep(support, directions, options);
  out.evaluations = static_cast<std::size_t>(directions.cols());
  out.direction = directions.col(best.index).normalized();
  out.box = ShrinkToFit(points, best.box.frame);
  return out;
}

}  // namespace

DirectionGrid GridDirections(const Frame3d& frame, int k,
                             const Vector3d& scales) {
  if (k < 1) throw GeometryError("grid radius k must be >= 1");
  if (!(scales.minCoeff() > 0)) throw GeometryError("grid scales must be > 0");
  DirectionGrid grid;
  grid.frame = frame;
  grid.k = k;
  grid.scales = scales;
  for (int i = 0; i <= k; ++i) {
    for (int j = -k; j <= k; ++j) {
      for (int l = -k; l <= k; ++l) {
        if (i == 0 && (j < 0 || (j == 0 && l <= 0))) continue;
        if (Gcd3(i, j, l) != 1) continue;
        grid.coefficients.push_back({i, j, l});
      }
    }
  }
  const Eigen::Matrix3d gen = frame.axes() * scales.asDiagonal();
  grid.directions.resize(3, static_cast<Index>(grid.coefficients.size()));
  for (std::size_t c = 0; c < grid.coefficients.size(); ++c) {
    const auto& co = grid.coefficients[c];
    grid.directions.col(static_cast<Index>(c)) =
        (gen * Vector3d(co[0], co[1], co[2])).normalized();
  }
  return grid;
}

Vector3d EdgeScales(const OrientedBoxd& box) {
  const Vector3d& h = box.half_extents;
  const double top = h.maxCoeff();
  if (!(h.minCoeff() > 1e-12 * top)) return Vector3d::Ones();
  return h / top;
}

SearchResult GridSearch(const PointSet& points, const DirectionGrid& grid,
                        const SweepOptions& options) {
  const Hull3 hull = ConvexHull3d(points);
  return SweepToResult(points, hull.vertices, grid.directions, options);
}

SearchResult GridSearch(const PointSet& points, const Frame3d& frame, int k,
                        const SweepOptions& options) {
  return GridSearch(points, GridDirections(frame, k), options);
}

SearchResult AllPairsSearch(const PointSet& points, bool raw_pairs,
                            const SweepOptions& options) {
  if (points.cols() < 2) {
    throw GeometryError("all-pairs search needs at least two points");
  }
  const Hull3 hull = ConvexHull3d(points);
  const PointSet& ends = raw_pairs ? points : hull.vertices;
  const Index m = ends.cols();
  std::vector<Vector3d> dirs;
  dirs.reserve(static_cast<std::size_t>(m * (m - 1) / 2));
  for (Index i = 0; i < m; ++i) {
    for (Index j = i + 1; j < m; ++j) {
      const Vector3d d = ends.col(j) - ends.col(i);
      if (d.squaredNorm() > 0) dirs.push_back(d);
    }
  }
  PointSet directions(3, static_cast<Index>(dirs.size()));
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    directions.col(static_cast<Index>(i)) = dirs[i];
  }
  return SweepToResult(points, hull.vertices, directions, options);
}

ImproveResult ImproveBox(const PointSet& points, const OrientedBoxd& box,
                         double tol, std::size_t max_rounds) {
  const Hull3 hull = ConvexHull3d(points);
  ImproveResult out;
  out.box = box;
  while (out.rounds < max_rounds) {
    const double current = out.box.Volume();
    const OrientedBoxd* pick = nullptr;
    std::array<OrientedBoxd, 3> refits;
    for (int a = 0; a < 3; ++a) {
      refits[a] = MinBoxAlongDirection(hull.vertices, out.box.frame.axis(a));
      ++out.evaluations;
      const double v = refits[a].Volume();
      if (v < current * (1 - tol) && (!pick || v < pick->Volume())) {
        pick = &refits[a];
      }
    }
    if (!pick) break;
    OrientedBoxd next = ShrinkToFit(points, pick->frame);
    if (!(next.Volume() < current)) break;
    out.box = next;
    ++out.rounds;
  }
  return out;
}

SearchResult ApproximateMinBox(const PointSet& points, double epsilon,
                               double c, const ApproxOptions& options) {
  if (points.cols() == 0) throw GeometryError("empty point set");
  if (!(epsilon > 0 && epsilon <= 1)) {
    throw GeometryError("epsilon must lie in (0, 1]");
  }
  if (!(c > 0)) throw GeometryError("grid constant c must be > 0");

  const OrientedBoxd bstar = ConstantFactorBox(points);
  PointSet decimated;
  const PointSet* support = &points;
  if (points.cols() > options.decimate_threshold) {
    Decimation d =
        DecimateGrid(points, epsilon, options.decimation_constant);
    if (!d.degenerate) {
      decimated = std::move(d.points);
      support = &decimated;
    }
  }

  const int k = static_cast<int>(std::ceil(c / epsilon));
  const Vector3d scales =
      options.edge_scaled_grid ? EdgeScales(bstar) : Vector3d::Ones();
  const DirectionGrid grid = GridDirections(bstar.frame, k, scales);
  const Hull3 hull = ConvexHull3d(*support);
  SearchResult out =
      SweepToResult(points, hull.vertices, grid.directions, options.sweep);

  if (options.improve) {
    const ImproveResult imp =
        ImproveBox(points, out.box, options.improve_tol);
    out.box = imp.box;
    out.evaluations += imp.evaluations;
  }
  if (out.box.Volume() > bstar.Volume()) out.box = bstar;
  return out;
}

void SearchConfig::Validate() const {
  if (k < 1) throw GeometryError("grid radius k must be >= 1");
  if (!(epsilon > 0 && epsilon <= 1)) {
    throw GeometryError("epsilon must lie in (0, 1]");
  }
  if (!(c > 0)) throw GeometryError("grid constant c must be > 0");
  if (!(improve_tol >= 0 && improve_tol < 1)) {
    throw GeometryError("improve tolerance must lie in [0, 1)");
  }
}

std::string MethodTag(const SearchConfig& config) {
  switch (config.method) {
    case Method::kAabb:
      return "aabb";
    case Method::kBstar:
      return "bstar";
    case Method::kAllPairs:
      return "all-pairs";
    case Method::kGridBstar:
      return "grid-bstar-" + std::to_string(config.k);
    case Method::kGridXyz:
      return "grid-xyz-" + std::to_string(config.k);
    case Method::kEpsilon: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "epsilon-%g", config.epsilon);
      return buf;
    }
  }
  return "unknown";
}

bool ParseMethodTag(const std::string& tag, SearchConfig& config) {
  auto suffix = [&](const std::string& prefix, std::string& rest) {
    if (tag.rfind(prefix, 0) != 0) return false;
    rest = tag.substr(prefix.size());
    return true;
  };
  auto to_int = [](const std::string& s, int& out) {
    if (s.empty()) return false;
    std::size_t used = 0;
    try {
      out = std::stoi(s, &used);
    } catch (const std::exception&) {
      return false;
    }
    return used == s.size();
  };
  auto to_double = [](const std::string& s, double& out) {
    if (s.empty()) return false;
    std::size_t used = 0;
    try {
      out = std::stod(s, &used);
    } catch (const std::exception&) {
      return false;
    }
    return used == s.size();
  };

  std::string rest;
  if (tag == "aabb") {
    config.method = Method::kAabb;
  } else if (tag == "bstar") {
    config.method = Method::kBstar;
  } else if (tag == "all-pairs") {
    config.method = Method::kAllPairs;
  } else if (tag == "grid-bstar" || tag == "grid-xyz" || tag == "epsilon") {
    config.method = tag == "grid-bstar" ? Method::kGridBstar
                    : tag == "grid-xyz" ? Method::kGridXyz
                                        : Method::kEpsilon;
  } else if (suffix("grid-bstar-", rest)) {
    config.method = Method::kGridBstar;
    if (!to_int(rest, config.k)) return false;
  } else if (suffix("grid-xyz-", rest)) {
    config.method = Method::kGridXyz;
    if (!to_int(rest, config.k)) return false;
  } else if (suffix("epsilon-", rest)) {
    config.method = Method::kEpsilon;
    if (!to_double(rest, config.epsilon)) return false;
  } else {
    return false;
  }
  return true;
}

FitOutcome Fit(const PointSet& points, const SearchConfig& config) {
  config.Validate();
  if (points.cols() == 0) throw GeometryError("empty point set");
  FitOutcome out;
  switch (config.method) {
    case Method::kAabb:
      out.raw.box = AxisAlignedBox(points);
      break;
    case Method::kBstar:
      out.raw.box = ConstantFactorBox(points);
      out.raw.direction = out.raw.box.frame.axis(0);
      break;
    case Method::kAllPairs:
      out.raw = AllPairsSearch(points, config.all_pairs_raw, config.sweep);
      break;
    case Method::kGridBstar: {
      const OrientedBoxd bstar = ConstantFactorBox(points);
      out.raw = GridSearch(
          points,
          GridDirections(bstar.frame, config.k, EdgeScales(bstar)),
          config.sweep);
      break;
    }
    case Method::kGridXyz:
      out.raw = GridSearch(points, Frame3d::Identity(), config.k,
                           config.sweep);
      break;
    case Method::kEpsilon: {
      ApproxOptions opt;
      opt.improve_tol = config.improve_tol;
      opt.decimate_threshold = config.decimate_threshold;
      opt.decimation_constant = config.decimation_constant;
      opt.sweep = config.sweep;
      out.raw = ApproximateMinBox(points, config.epsilon, config.c, opt);
      break;
    }
  }
  if (config.improve) {
    out.improved = ImproveBox(points, out.raw.box, config.improve_tol);
    out.has_improved = true;
  }
  return out;
}

}  // namespace mvbb
