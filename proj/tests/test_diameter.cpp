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

#include "mvbb/diameter.hpp"
#include "oracles.hpp"

using namespace mvbb;

namespace {

// Independent exhaustive diameter, returning the length only.
double BruteDiameter(const PointSet& p) {
  double best = 0;
  for (Index i = 0; i < p.cols(); ++i) {
    for (Index j = i + 1; j < p.cols(); ++j) {
      best = std::max(best, (p.col(i) - p.col(j)).norm());
    }
  }
  return best;
}

PointSet Mixed(int kind, int n, std::mt19937_64& rng) {
  switch (kind % 4) {
    case 0: return oracle::UniformCube(n, rng);
    case 1: return oracle::UniformBall(n, rng);
    case 2: {  // flat slab
      PointSet p = oracle::UniformCube(n, rng);
      p.row(2).setZero();
      return p;
    }
    default: {  // segment with duplicates
      PointSet p = oracle::UniformCube(n, rng);
      p.row(1) = p.row(0) * 2;
      p.row(2) = p.row(0) * -0.5;
      p.col(n - 1) = p.col(0);
      return p;
    }
  }
}

}  // namespace

TEST_CASE("exact diameter of simple sets") {
  PointSet p(3, 4);
  p << 0, 1, 0, 3,
       0, 0, 4, 0,
       0, 0, 0, 0;
  const PointPair d = DiameterExact(p);
  CHECK(d.length == doctest::Approx(5.0));
  CHECK(d.s == 2);
  CHECK(d.t == 3);

  const PointSet single = PointSet::Zero(3, 1);
  CHECK(DiameterExact(single).length == 0);
  CHECK_THROWS_AS(DiameterExact(PointSet(3, 0)), GeometryError);
}

TEST_CASE("longest-axis pair on a cube picks the first extremes on x") {
  PointSet p(3, 8);
  for (int c = 0; c < 8; ++c) p.col(c) = Vector3d(c & 1, (c >> 1) & 1, c >> 2);
  const PointPair d = DiameterSqrt3(p);
  CHECK(d.s == 0);
  CHECK(d.t == 1);
  CHECK(d.length == doctest::Approx(1.0));
  CHECK(BruteDiameter(p) <= std::sqrt(3.0) * d.length + 1e-12);
}

TEST_CASE("sqrt 3 bound on random sets") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const PointSet p = Mixed(trial, 1000, rng);
    const PointPair d = DiameterSqrt3(p);
    const double exact = BruteDiameter(p);
    CHECK(d.length <= exact * (1 + 1e-12));
    CHECK(exact <= std::sqrt(3.0) * d.length * (1 + 1e-12));
    CHECK(d.length == doctest::Approx((p.col(d.s) - p.col(d.t)).norm()));
  }
}

TEST_CASE("grid approximation bound") {
  std::mt19937_64 rng(11);
  for (double eps : {1.0, 0.5, 0.1, 0.02}) {
    for (int trial = 0; trial < 40; ++trial) {
      const PointSet p = Mixed(trial, 300, rng);
      const PointPair d = DiameterGridEps(p, eps);
      const double exact = BruteDiameter(p);
      CHECK(d.length >= (1 - eps) * exact - 1e-12 * exact);
      CHECK(d.length <= exact * (1 + 1e-12));
      REQUIRE(d.s < p.cols());
      REQUIRE(d.t < p.cols());
      CHECK(d.length == doctest::Approx((p.col(d.s) - p.col(d.t)).norm()));
    }
  }
}

TEST_CASE("grid approximation on a dense ball") {
  std::mt19937_64 rng(3);
  const PointSet p = oracle::UniformBall(5000, rng);
  const PointPair d = DiameterGridEps(p, 0.1);
  CHECK(d.length >= 0.9 * BruteDiameter(p));
}

TEST_CASE("grid approximation edge cases") {
  const PointSet p = PointSet::Ones(3, 5);
  const PointPair d = DiameterGridEps(p, 0.5);
  CHECK(d.length == 0);
  CHECK_THROWS_AS(DiameterGridEps(p, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(DiameterGridEps(p, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(DiameterGridEps(PointSet(3, 0), 0.5), GeometryError);
}
