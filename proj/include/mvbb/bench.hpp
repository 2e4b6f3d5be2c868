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

#ifndef MVBB_BENCH_HPP
#define MVBB_BENCH_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "mvbb/search.hpp"

namespace mvbb {

/// One row of a benchmark table.
struct FitReport {
  std::string method;
  double volume = 0;
  std::size_t mvbb_calls = 0;  // MinBoxAlongDirection evaluations
  double per_call_us = 0;
  double total_ms = 0;
  bool improved = false;
};

/// Fit plus timing. For an improved run, `improved_report` covers the
/// improvement step alone (its calls and its time) and carries the final
/// volume, matching how the raw and improved rows are tabulated.
struct TimedFit {
  FitOutcome outcome;
  FitReport raw_report;
  FitReport improved_report;
};

TimedFit RunTimedFit(const PointSet& points, const SearchConfig& config);

/// Two rows per configuration: raw, then improved. Volumes are
/// deterministic; timings are not.
std::vector<FitReport> Bench(const PointSet& points,
                             const std::vector<SearchConfig>& configs);

/// Header: method,improved,volume,mvbb_calls,per_call_us,total_ms.
void WriteBenchCsv(std::ostream& out, const std::vector<FitReport>& rows);

/// The grid of methods tabulated by default: bstar, all-pairs, and the
/// B*-frame and Cartesian grids at k = 2, 5, 10, 20.
std::vector<SearchConfig> DefaultBenchConfigs();

}  // namespace mvbb

#endif  // MVBB_BENCH_HPP
