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

#include "mvbb/bench.hpp"

#include <chrono>
#include <cstdio>
#include <ostream>

namespace mvbb {

namespace {

using Clock = std::chrono::steady_clock;

double Millis(Clock::duration d) {
  return std::chrono::duration<double, std::milli>(d).count();
}

FitReport MakeReport(const std::string& method, double volume,
                     std::size_t calls, double ms, bool improved) {
  FitReport r;
  r.method = method;
  r.volume = volume;
  r.mvbb_calls = calls;
  r.total_ms = ms;
  r.per_call_us = calls > 0 ? 1000.0 * ms / static_cast<double>(calls) : 0;
  r.improved = improved;
  return r;
}

}  // namespace

TimedFit RunTimedFit(const PointSet& points, const SearchConfig& config) {
  SearchConfig raw_config = config;
  raw_config.improve = false;
  const std::string tag = MethodTag(config);

  TimedFit out;
  const auto t0 = Clock::now();
  out.outcome = Fit(points, raw_config);
  const auto t1 = Clock::now();
  out.raw_report = MakeReport(tag, out.outcome.raw.box.Volume(),
                              out.outcome.raw.evaluations, Millis(t1 - t0),
                              false);
  if (config.improve) {
    out.outcome.improved =
        ImproveBox(points, out.outcome.raw.box, config.improve_tol);
    out.outcome.has_improved = true;
    const auto t2 = Clock::now();
    out.improved_report = MakeReport(tag, out.outcome.improved.box.Volume(),
                                     out.outcome.improved.evaluations,
                                     Millis(t2 - t1), true);
  }
  return out;
}

std::vector<FitReport> Bench(const PointSet& points,
                             const std::vector<SearchConfig>& configs) {
  std::vector<FitReport> rows;
  for (SearchConfig c : configs) {
    c.improve = true;
    const TimedFit t = RunTimedFit(points, c);
    rows.push_back(t.raw_report);
    rows.push_back(t.improved_report);
  }
  return rows;
}

void WriteBenchCsv(std::ostream& out, const std::vector<FitReport>& rows) {
  out << "method,improved,volume,mvbb_calls,per_call_us,total_ms\n";
  char buf[256];
  for (const FitReport& r : rows) {
    std::snprintf(buf, sizeof buf, "%s,%d,%.17g,%zu,%.3f,%.3f\n",
                  r.method.c_str(), r.improved ? 1 : 0, r.volume,
                  r.mvbb_calls, r.per_call_us, r.total_ms);
    out << buf;
  }
}

std::vector<SearchConfig> DefaultBenchConfigs() {
  std::vector<SearchConfig> out;
  SearchConfig c;
  c.method = Method::kBstar;
  out.push_back(c);
  c.method = Method::kAllPairs;
  out.push_back(c);
  for (Method m : {Method::kGridBstar, Method::kGridXyz}) {
    for (int k : {2, 5, 10, 20}) {
      c.method = m;
      c.k = k;
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace mvbb
