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
#include <random>

#include <doctest.h>

#include "mvbb/fitter.hpp"
#include "mvbb/generators.hpp"
#include "mvbb/hull.hpp"
#include "oracles.hpp"

using namespace mvbb;

namespace {

PointSet UnitCube() {
  PointSet p(3, 8);
  for (int c = 0; c < 8; ++c) p.col(c) = Vector3d(c & 1, (c >> 1) & 1, c >> 2);
  return p;
}

Vector3d RandomUnit(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  return Vector3d(g(rng), g(rng), g(rng)).normalized();
}

}  // namespace

TEST_CASE("box along a direction: fixed examples") {
  CHECK(MinBoxAlongDirection(Paper4(), Vector3d::UnitX()).Volume() ==
        doctest::Approx(0.04).epsilon(1e-12));
  const OrientedBoxd b = MinBoxAlongDirection(UnitCube(), Vector3d(0, 0, 2));
  CHECK(b.Volume() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(b.frame.axis(0).isApprox(Vector3d::UnitZ()));
  CHECK_THROWS_AS(MinBoxAlongDirection(UnitCube(), Vector3d::Zero()),
                  GeometryError);
}

TEST_CASE("box along a direction against the angle-sweep oracle") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const PointSet p = oracle::UniformCube(40, rng);
    const Vector3d v = RandomUnit(rng);
    const OrientedBoxd b = MinBoxAlongDirection(p, v);
    const double swept = oracle::SweepBoxVolume(p, v, 1000);
    CHECK(b.Volume() <= swept * (1 + 1e-9));
    // 1000 samples over a quarter turn bound the oracle's excess.
    CHECK(swept <= b.Volume() * 1.01);
    CHECK(BoxContainsAll(b, p));
    CHECK(b.frame.OrthonormalityError() < 1e-12);
    CHECK(b.frame.Determinant() == doctest::Approx(1.0));
    CHECK(MinBoxAlongDirection(p, -v).Volume() ==
          doctest::Approx(b.Volume()).epsilon(1e-9));
    CHECK(b.Volume() >= HullVolume(ConvexHull3d(p)) * (1 - 1e-9));
  }
}

TEST_CASE("axis-aligned box") {
  const OrientedBoxd b = AxisAlignedBox(UnitCube());
  CHECK(b.Volume() == doctest::Approx(1.0));
  CHECK(b.center.isApprox(Vector3d::Constant(0.5)));
  CHECK(b.frame.axes() == Eigen::Matrix3d::Identity());
}

TEST_CASE("constant-factor box") {
  CHECK(ConstantFactorBox(Paper4()).Volume() ==
        doctest::Approx(0.08).epsilon(1e-9));
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> side(0.2, 5);
  for (int trial = 0; trial < 50; ++trial) {
    const double a = side(rng), b = side(rng), c = side(rng);
    const PointSet p = RotatedBoxPoints(a, b, c, 50, rng());
    const OrientedBoxd box = ConstantFactorBox(p);
    CHECK(box.Volume() <= 6 * std::sqrt(6.0) * a * b * c);
    CHECK(box.Volume() >= a * b * c * (1 - 1e-9));
    CHECK(BoxContainsAll(box, p));
  }
  SUBCASE("planar input has zero volume") {
    PointSet p = oracle::UniformCube(30, rng);
    p.row(2).setConstant(0.3);
    CHECK(ConstantFactorBox(p).Volume() == doctest::Approx(0.0));
  }
  SUBCASE("single point") {
    CHECK(ConstantFactorBox(PointSet::Ones(3, 4)).Volume() == 0);
  }
}

TEST_CASE("decimation of one point gives its cell corners") {
  // A non-degenerate reference set with one extra point far inside.
  const Decimation d = DecimateGrid(UnitCube(), 1.0, 1.0);
  CHECK_FALSE(d.degenerate);
  CHECK(d.points.cols() >= 8);
  const Hull3 h = ConvexHull3d(d.points);
  CHECK(HullVolume(h) >= 1.0 - 1e-9);
}

TEST_CASE("decimated hull contains the input hull") {
  std::mt19937_64 rng(8);
  for (double eps : {1.0, 0.5, 0.2}) {
    for (int trial = 0; trial < 10; ++trial) {
      const PointSet p = oracle::UniformBall(2000, rng);
      const Decimation d = DecimateGrid(p, eps);
      CHECK_FALSE(d.degenerate);
      const Hull3 h = ConvexHull3d(d.points);
      const double tol = 1e-9 * AabbDiagonal(p);
      for (Index i = 0; i < p.cols(); ++i) CHECK(h.Contains(p.col(i), tol));
      // At most two points per grid column.
      const double per_axis = 2 * 4 / eps + 2;
      CHECK(DecimateGrid(p, eps, 4).points.cols() <= 2 * per_axis * per_axis);
    }
  }
}

TEST_CASE("decimation of a degenerate set returns it unchanged") {
  PointSet p(3, 3);
  p << 0, 1, 2, 0, 1, 2, 0, 1, 2;
  const Decimation d = DecimateGrid(p, 0.5);
  CHECK(d.degenerate);
  CHECK(d.points == p);
  CHECK_THROWS_AS(DecimateGrid(p, 0.0), GeometryError);
  CHECK_THROWS_AS(DecimateGrid(p, 0.5, -1), GeometryError);
}
