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

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <set>

#include <doctest.h>

#include "mvbb/fitter.hpp"
#include "mvbb/generators.hpp"
#include "mvbb/hull.hpp"
#include "mvbb/search.hpp"
#include "oracles.hpp"

using namespace mvbb;

namespace {

PointSet UnitCube() {
  PointSet p(3, 8);
  for (int c = 0; c < 8; ++c) p.col(c) = Vector3d(c & 1, (c >> 1) & 1, c >> 2);
  return p;
}

// Counts pairwise non-parallel nonzero integer directions in [-k, k]^3 by
// comparing normalized vectors.
std::size_t CountDistinctDirections(int k) {
  std::set<std::array<long long, 3>> seen;
  for (int i = -k; i <= k; ++i) {
    for (int j = -k; j <= k; ++j) {
      for (int l = -k; l <= k; ++l) {
        if (i == 0 && j == 0 && l == 0) continue;
        Vector3d d(i, j, l);
        d.normalize();
        for (int a = 0; a < 3; ++a) {
          if (d[a] != 0) {
            if (d[a] < 0) d = -d;
            break;
          }
        }
        seen.insert({std::llround(d.x() * 1e9), std::llround(d.y() * 1e9),
                     std::llround(d.z() * 1e9)});
      }
    }
  }
  return seen.size();
}

Frame3d RandomFrame(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  return Frame3d::FromTwoAxes(Vector3d(g(rng), g(rng), g(rng)),
                              Vector3d(g(rng), g(rng), g(rng)));
}

}  // namespace

TEST_CASE("grid direction counts") {
  CHECK(GridDirections(Frame3d::Identity(), 1).size() == 13);
  CHECK(GridDirections(Frame3d::Identity(), 2).size() == 49);
  for (int k : {1, 2, 3, 5}) {
    CHECK(GridDirections(Frame3d::Identity(), k).size() ==
          static_cast<Index>(CountDistinctDirections(k)));
  }
  std::mt19937_64 rng(1);
  const Frame3d f = RandomFrame(rng);
  const DirectionGrid g = GridDirections(f, 3, Vector3d(1, 0.5, 0.25));
  CHECK(g.size() == GridDirections(Frame3d::Identity(), 3).size());
  for (std::size_t e = 0; e < g.coefficients.size(); ++e) {
    const auto& c = g.coefficients[e];
    CHECK(std::gcd(std::gcd(std::abs(c[0]), std::abs(c[1])), std::abs(c[2])) ==
          1);
    if (e > 0) CHECK(g.coefficients[e - 1] < c);
    const Vector3d expect =
        (f.axes() * Vector3d(c[0], c[1] * 0.5, c[2] * 0.25)).normalized();
    CHECK((g.directions.col(static_cast<Index>(e)) - expect).norm() < 1e-12);
  }
  CHECK_THROWS_AS(GridDirections(f, 0), GeometryError);
  CHECK_THROWS_AS(GridDirections(f, 1, Vector3d(1, 0, 1)), GeometryError);
}

TEST_CASE("edge scales") {
  OrientedBoxd b;
  b.half_extents = Vector3d(2, 1, 0.5);
  CHECK(EdgeScales(b).isApprox(Vector3d(1, 0.5, 0.25)));
  b.half_extents = Vector3d(2, 1, 0);
  CHECK(EdgeScales(b) == Vector3d::Ones());
}

TEST_CASE("grid search on fixed inputs") {
  CHECK(GridSearch(UnitCube(), Frame3d::Identity(), 1).box.Volume() ==
        doctest::Approx(1.0));
  const PointSet p = Paper4();
  const OrientedBoxd bstar = ConstantFactorBox(p);
  const SearchResult r =
      GridSearch(p, GridDirections(bstar.frame, 2, EdgeScales(bstar)));
  CHECK(std::abs(r.box.Volume() - 0.04) <= 5e-4);
  CHECK(r.evaluations == 49);
}

TEST_CASE("grid search is monotone in k and contains the input") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const PointSet p = oracle::UniformCube(60, rng);
    const Frame3d f = RandomFrame(rng);
    const double hull_volume = HullVolume(ConvexHull3d(p));
    double prev = INFINITY;
    for (int k : {1, 2, 5, 10}) {
      const SearchResult r = GridSearch(p, f, k);
      CHECK(r.box.Volume() <= prev * (1 + 1e-12));
      CHECK(r.box.Volume() >= hull_volume * (1 - 1e-9));
      CHECK(BoxContainsAll(r.box, p));
      prev = r.box.Volume();
    }
  }
}

TEST_CASE("sweep is deterministic across thread counts") {
  std::mt19937_64 rng(13);
  const PointSet p = oracle::UniformBall(200, rng);
  const Frame3d f = RandomFrame(rng);
  const SearchResult a = GridSearch(p, f, 5, {.threads = 1});
  const SearchResult b = GridSearch(p, f, 5, {.threads = 4});
  const SearchResult c = GridSearch(p, f, 5, {.threads = 1});
  CHECK(a.box.Volume() == b.box.Volume());
  CHECK(a.direction == b.direction);
  CHECK(a.box.center == c.box.center);
  CHECK(a.box.frame.axes() == b.box.frame.axes());
}

TEST_CASE("all-pairs search") {
  CHECK(AllPairsSearch(Paper4()).box.Volume() ==
        doctest::Approx(0.0798).epsilon(0.025));
  PointSet two(3, 2);
  two << 0, 1, 0, 1, 0, 1;
  CHECK(AllPairsSearch(two).box.Volume() == 0);
  CHECK_THROWS_AS(AllPairsSearch(PointSet::Zero(3, 1)), GeometryError);
  std::mt19937_64 rng(2);
  const PointSet p = oracle::UniformCube(25, rng);
  const SearchResult hull_pairs = AllPairsSearch(p);
  const SearchResult raw = AllPairsSearch(p, true);
  CHECK(raw.evaluations == 25 * 24 / 2);
  CHECK(raw.box.Volume() <= hull_pairs.box.Volume() * (1 + 1e-12));
}

TEST_CASE("improvement step") {
  SUBCASE("a fixed point is returned unchanged") {
    const OrientedBoxd b = AxisAlignedBox(UnitCube());
    const ImproveResult r = ImproveBox(UnitCube(), b);
    CHECK(r.evaluations == 3);
    CHECK(r.rounds == 0);
    CHECK(r.box.Volume() == b.Volume());
    CHECK(r.box.frame.axes() == b.frame.axes());
  }
  SUBCASE("a rotated cube is recovered") {
    const PointSet p =
        Eigen::AngleAxisd(std::numbers::pi / 4, Vector3d::UnitZ())
            .toRotationMatrix() *
        UnitCube();
    const OrientedBoxd start = AxisAlignedBox(p);
    const ImproveResult r = ImproveBox(p, start);
    CHECK(r.box.Volume() < start.Volume());
    CHECK(r.box.Volume() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.rounds >= 1);
  }
  SUBCASE("never increases volume") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
      const PointSet p = oracle::UniformCube(50, rng);
      const OrientedBoxd start = ShrinkToFit(p, RandomFrame(rng));
      const ImproveResult r = ImproveBox(p, start);
      CHECK(r.box.Volume() <= start.Volume());
      CHECK(BoxContainsAll(r.box, p));
    }
  }
}

TEST_CASE("approximate minimum box on rotated boxes") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> side(0.2, 5);
  for (int trial = 0; trial < 15; ++trial) {
    const double a = side(rng), b = side(rng), c = side(rng);
    const PointSet p = RotatedBoxPoints(a, b, c, 50, rng());
    const double opt = a * b * c;
    const SearchResult fine = ApproximateMinBox(p, 0.2);
    CHECK(fine.box.Volume() <= 1.2 * opt);
    CHECK(fine.box.Volume() >= opt * (1 - 1e-9));
    CHECK(BoxContainsAll(fine.box, p));
    const SearchResult coarse = ApproximateMinBox(p, 1.0);
    CHECK(coarse.box.Volume() <= 2 * opt);
    CHECK(coarse.box.Volume() <= ConstantFactorBox(p).Volume() * (1 + 1e-12));
  }
  CHECK_THROWS_AS(ApproximateMinBox(UnitCube(), 0.0), GeometryError);
  CHECK_THROWS_AS(ApproximateMinBox(UnitCube(), 0.5, -1), GeometryError);
}

TEST_CASE("approximate minimum box decimates large inputs") {
  std::mt19937_64 rng(5);
  const PointSet p = oracle::UniformBall(3000, rng);
  ApproxOptions opts;
  opts.decimate_threshold = 1000;
  opts.decimation_constant = 16;
  const SearchResult r = ApproximateMinBox(p, 0.5, 4.0, opts);
  CHECK(BoxContainsAll(r.box, p));
  CHECK(r.box.Volume() <= ConstantFactorBox(p).Volume() * (1 + 1e-12));
}

TEST_CASE("method tags round trip") {
  SearchConfig c;
  for (const char* tag : {"aabb", "bstar", "all-pairs", "grid-bstar-7",
                          "grid-xyz-3", "epsilon-0.25"}) {
    CHECK(ParseMethodTag(tag, c));
    CHECK(MethodTag(c) == tag);
  }
  CHECK(ParseMethodTag("grid-bstar", c));
  CHECK(c.method == Method::kGridBstar);
  CHECK_FALSE(ParseMethodTag("bogus", c));
  CHECK_FALSE(ParseMethodTag("grid-xyz-x", c));
}

TEST_CASE("fit dispatch") {
  const PointSet p = Paper4();
  SearchConfig c;
  c.method = Method::kBstar;
  CHECK(Fit(p, c).box().Volume() == doctest::Approx(0.08).epsilon(1e-9));
  c.method = Method::kGridXyz;
  c.improve = true;
  const FitOutcome o = Fit(p, c);
  CHECK(o.has_improved);
  CHECK(o.box().Volume() <= o.raw.box.Volume());
  c.k = 0;
  CHECK_THROWS_AS(c.Validate(), GeometryError);
}
