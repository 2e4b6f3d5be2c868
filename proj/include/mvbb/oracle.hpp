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

#ifndef MVBB_ORACLE_HPP
#define MVBB_ORACLE_HPP

#include "mvbb/geom_core.hpp"
#include "mvbb/search.hpp"

namespace mvbb {

enum class DirectionSequence {
  /// Spherical Fibonacci lattice on the upper hemisphere. Evenly spread for
  /// the requested count, but not nested across counts.
  kFibonacciLattice,
  /// Golden-ratio spiral with heights from a base-2 van der Corput
  /// sequence. Every prefix is the sequence for a smaller count.
  kNestedSpiral,
};

/// `count` deterministic unit directions on the hemisphere z >= 0.
PointSet HemisphereDirections(Index count,
                              DirectionSequence sequence =
                                  DirectionSequence::kFibonacciLattice);

/// Reference upper bound on the optimal volume: the best
/// MinBoxAlongDirection over `samples` hemisphere directions. Requires
/// samples >= 1.
SearchResult DenseRotationBox(const PointSet& points, Index samples,
                              DirectionSequence sequence =
                                  DirectionSequence::kFibonacciLattice,
                              const SweepOptions& options = {});

/// Convex hull volume: no bounding box of the input can be smaller.
double LowerBoundVolume(const PointSet& points);

}  // namespace mvbb

#endif  // MVBB_ORACLE_HPP
