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

#ifndef MVBB_SEARCH_HPP
#define MVBB_SEARCH_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "mvbb/fitter.hpp"
#include "mvbb/geom_core.hpp"

namespace mvbb {

/// Candidate box axes: the directions of lattice points
/// i*s1*b1 + j*s2*b2 + l*s3*b3 with |i|, |j|, |l| <= k.
///
/// Only primitive coefficient triples (gcd 1) whose first nonzero entry is
/// positive are kept, so no two entries are parallel. Entries are ordered
/// lexicographically by coefficient triple.
struct DirectionGrid {
  Frame3d frame;
  int k = 1;
  Vector3d scales = Vector3d::Ones();
  std::vector<std::array<int, 3>> coefficients;
  PointSet directions;  // unit columns, parallel to `coefficients`

  Index size() const { return directions.cols(); }
};

/// Requires k >= 1 and positive scales.
DirectionGrid GridDirections(const Frame3d& frame, int k,
                             const Vector3d& scales = Vector3d::Ones());

/// Lattice scales for the grid spanned by a box's edge vectors, normalized
/// so the largest is 1. Falls back to unit scales for boxes with a
/// (numerically) zero side.
Vector3d EdgeScales(const OrientedBoxd& box);

struct SearchResult {
  OrientedBoxd box;
  std::size_t evaluations = 0;  // calls to MinBoxAlongDirection
  Vector3d direction = Vector3d::UnitZ();
};

struct SweepOptions {
  /// Worker threads for the direction sweep; 0 picks the hardware
  /// concurrency. The result does not depend on this value.
  unsigned threads = 1;
};

/// Best MinBoxAlongDirection over the grid, evaluated on the convex hull
/// vertices. Ties go to the earliest grid entry. The returned box is
/// re-fitted to the full input in the winning frame.
SearchResult GridSearch(const PointSet& points, const DirectionGrid& grid,
                        const SweepOptions& options = {});
SearchResult GridSearch(const PointSet& points, const Frame3d& frame, int k,
                        const SweepOptions& options = {});

/// Best MinBoxAlongDirection over the directions joining two points.
/// Candidates are pairs of hull vertices unless `raw_pairs` is set, in which
/// case every input pair is tried. Requires at least two points.
SearchResult AllPairsSearch(const PointSet& points, bool raw_pairs = false,
                            const SweepOptions& options = {});

struct ImproveResult {
  OrientedBoxd box;
  std::size_t evaluations = 0;
  std::size_t rounds = 0;  // improvements adopted
};

/// Local descent: refit along each of the box's three axes and adopt the
/// best refit whose volume is below (1 - tol) times the current one; stop
/// when no axis qualifies. The input box is returned unchanged when it is
/// already a fixed point.
ImproveResult ImproveBox(const PointSet& points, const OrientedBoxd& box,
                         double tol = 1e-9, std::size_t max_rounds = 10000);

struct ApproxOptions {
  bool improve = true;
  double improve_tol = 1e-9;
  /// Inputs with more points than this are decimated first.
  Index decimate_threshold = 10000;
  double decimation_constant = kDecimationConstant;
  /// Use the constant-factor box's edge vectors as lattice generators;
  /// unit frame vectors otherwise.
  bool edge_scaled_grid = true;
  SweepOptions sweep;
};

/// (1 + epsilon)-approximate minimum-volume box: a grid search of radius
/// ceil(c / epsilon) around the constant-factor box's frame, followed by
/// local improvement. Never worse than ConstantFactorBox.
///
/// Requires 0 < epsilon <= 1 and c > 0.
SearchResult ApproximateMinBox(const PointSet& points, double epsilon,
                               double c = 4.0,
                               const ApproxOptions& options = {});

enum class Method { kAabb, kBstar, kAllPairs, kGridBstar, kGridXyz, kEpsilon };

struct SearchConfig {
  Method method = Method::kEpsilon;
  int k = 2;               // grid radius for the grid methods
  double epsilon = 0.5;    // for Method::kEpsilon
  double c = 4.0;          // grid constant for Method::kEpsilon
  bool improve = false;
  double improve_tol = 1e-9;
  bool all_pairs_raw = false;
  Index decimate_threshold = 10000;
  double decimation_constant = kDecimationConstant;
  SweepOptions sweep;

  /// Throws GeometryError on k < 1, epsilon outside (0, 1], or c <= 0.
  void Validate() const;
};

/// Short tag for a configuration: "aabb", "bstar", "all-pairs",
/// "grid-bstar-<k>", "grid-xyz-<k>" or "epsilon-<e>".
std::string MethodTag(const SearchConfig& config);

/// Parses a tag produced by MethodTag into `config` (other fields are left
/// alone). Returns false on an unknown tag.
bool ParseMethodTag(const std::string& tag, SearchConfig& config);

struct FitOutcome {
  SearchResult raw;
  /// Set when config.improve; `improved.box` is the final answer.
  ImproveResult improved;
  bool has_improved = false;

  const OrientedBoxd& box() const {
    return has_improved ? improved.box : raw.box;
  }
};

/// Runs the configured method, then the optional improvement step.
FitOutcome Fit(const PointSet& points, const SearchConfig& config);

}  // namespace mvbb

#endif  // MVBB_SEARCH_HPP
