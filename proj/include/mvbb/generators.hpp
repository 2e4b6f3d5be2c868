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

#ifndef MVBB_GENERATORS_HPP
#define MVBB_GENERATORS_HPP

#include <cstdint>
#include <random>

#include "mvbb/geom_core.hpp"

namespace mvbb {

/// Uniformly distributed rotation (Haar measure), from a normalized
/// Gaussian quaternion.
Eigen::Matrix3d RandomRotation(std::mt19937_64& rng);

/// The four points (-1,-0.1,0), (-1,0.1,0), (1,0,-0.1), (1,0,0.1). A nonzero
/// seed applies a seeded random rotation.
PointSet Paper4(std::uint64_t rotate_seed = 0);

/// n points uniform on the unit sphere.
PointSet SpherePoints(Index n, std::uint64_t seed);

/// The 8 corners of an a x b x c box centered at the origin followed by
/// n - 8 points uniform in its interior, all under one seeded rotation.
/// Requires n >= 8 and non-negative sides.
PointSet RotatedBoxPoints(double a, double b, double c, Index n,
                          std::uint64_t seed);

}  // namespace mvbb

#endif  // MVBB_GENERATORS_HPP
