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

// Command-line driver: fit, gen, bench.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mvbb/mvbb.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitDegenerate = 3;

// Writes to `path`, or stdout when it is empty.
template <typename Fn>
void Emit(const std::string& path, Fn&& fn) {
  if (path.empty()) {
    fn(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw mvbb::InputError("cannot write '" + path + "'", 0);
  fn(out);
  if (!out) throw mvbb::InputError("write failed for '" + path + "'", 0);
}

struct FitArgs {
  std::string input;
  std::string method = "epsilon";
  int k = 2;
  double epsilon = 0.5;
  double c = 4.0;
  bool improve = false;
  double improve_tol = 1e-9;
  std::uint64_t seed = 0;
  std::string out;
  std::string mesh;
  bool all_pairs_raw = false;
  long long decimate_threshold = 10000;
  double decimation_constant = mvbb::kDecimationConstant;
  unsigned threads = 1;
  bool strict = false;
};

struct GenArgs {
  std::string kind;
  std::vector<double> params;
  std::uint64_t seed = 0;
  std::uint64_t rotate_seed = 0;
  std::string out;
};

struct BenchArgs {
  std::string input;
  std::vector<std::string> methods;
  double improve_tol = 1e-9;
  std::string out;
  unsigned threads = 1;
};

mvbb::SearchConfig ConfigFrom(const FitArgs& a) {
  mvbb::SearchConfig config;
  config.k = a.k;
  config.epsilon = a.epsilon;
  if (!mvbb::ParseMethodTag(a.method, config)) {
    throw CLI::ValidationError("--method", "unknown method '" + a.method + "'");
  }
  config.c = a.c;
  config.improve = a.improve;
  config.improve_tol = a.improve_tol;
  config.all_pairs_raw = a.all_pairs_raw;
  config.decimate_threshold = a.decimate_threshold;
  config.decimation_constant = a.decimation_constant;
  config.sweep.threads = a.threads;
  config.Validate();
  return config;
}

int RunFit(const FitArgs& a) {
  const mvbb::PointSet points = mvbb::ReadPoints(a.input);
  const mvbb::SearchConfig config = ConfigFrom(a);
  const mvbb::TimedFit fit = mvbb::RunTimedFit(points, config);
  const mvbb::OrientedBoxd& box = fit.outcome.box();
  const std::string tag = mvbb::MethodTag(config);

  Emit(a.out, [&](std::ostream& os) {
    os << mvbb::BoxToJson(box, tag).dump(2) << "\n";
  });
  if (!a.mesh.empty()) {
    Emit(a.mesh, [&](std::ostream& os) { mvbb::WriteOff(os, box); });
  }

  const mvbb::FitReport& r = fit.raw_report;
  std::cerr << "method=" << r.method << " volume=" << r.volume
            << " mvbb_calls=" << r.mvbb_calls << " total_ms=" << r.total_ms;
  if (config.improve) {
    std::cerr << " improved_volume=" << fit.improved_report.volume
              << " improve_calls=" << fit.improved_report.mvbb_calls;
  }
  std::cerr << "\n";

  if (!(box.Volume() > 0)) {
    std::cerr << "warning: degenerate input, box has zero volume\n";
    if (a.strict) return kExitDegenerate;
  }
  return kExitOk;
}

int RunGen(const GenArgs& a) {
  mvbb::PointSet points;
  auto need = [&](std::size_t n, const char* usage) {
    if (a.params.size() != n) {
      throw CLI::ValidationError("gen", std::string("usage: gen ") + usage);
    }
  };
  if (a.kind == "paper4") {
    need(0, "paper4 [--rotate-seed S]");
    points = mvbb::Paper4(a.rotate_seed);
  } else if (a.kind == "sphere") {
    need(1, "sphere N [--seed S]");
    points = mvbb::SpherePoints(static_cast<mvbb::Index>(a.params[0]), a.seed);
  } else if (a.kind == "rotbox") {
    need(4, "rotbox A B C N [--seed S]");
    points = mvbb::RotatedBoxPoints(a.params[0], a.params[1], a.params[2],
                                    static_cast<mvbb::Index>(a.params[3]),
                                    a.seed);
  } else {
    throw CLI::ValidationError("gen", "unknown kind '" + a.kind +
                                          "' (paper4, sphere, rotbox)");
  }
  Emit(a.out, [&](std::ostream& os) { mvbb::WriteXyz(os, points); });
  return kExitOk;
}

int RunBench(const BenchArgs& a) {
  const mvbb::PointSet points = mvbb::ReadPoints(a.input);
  std::vector<mvbb::SearchConfig> configs;
  if (a.methods.empty()) {
    configs = mvbb::DefaultBenchConfigs();
  } else {
    for (const std::string& m : a.methods) {
      mvbb::SearchConfig c;
      if (!mvbb::ParseMethodTag(m, c)) {
        throw CLI::ValidationError("--methods", "unknown method '" + m + "'");
      }
      configs.push_back(c);
    }
  }
  for (auto& c : configs) {
    c.improve_tol = a.improve_tol;
    c.sweep.threads = a.threads;
    c.Validate();
  }
  const auto rows = mvbb::Bench(points, configs);
  Emit(a.out, [&](std::ostream& os) { mvbb::WriteBenchCsv(os, rows); });
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximate minimum-volume oriented bounding boxes"};
  app.require_subcommand(1);

  FitArgs fit;
  auto* fit_cmd = app.add_subcommand("fit", "Fit a box to a point file");
  fit_cmd->add_option("input", fit.input, "Point file (.xyz or .csv)")
      ->required();
  fit_cmd
      ->add_option("--method", fit.method,
                   "aabb | bstar | all-pairs | grid-bstar | grid-xyz | "
                   "epsilon (or tagged forms such as grid-bstar-5)")
      ->capture_default_str();
  fit_cmd->add_option("--k", fit.k, "Grid radius for grid methods")
      ->capture_default_str();
  fit_cmd->add_option("--epsilon", fit.epsilon, "Approximation parameter")
      ->capture_default_str();
  fit_cmd->add_option("--c", fit.c, "Grid constant: radius ceil(c/epsilon)")
      ->capture_default_str();
  fit_cmd->add_flag("--improve", fit.improve, "Run the local improvement step");
  fit_cmd->add_option("--improve-tol", fit.improve_tol,
                      "Relative decrease required per improvement round")
      ->capture_default_str();
  fit_cmd->add_option("--seed", fit.seed, "Accepted for symmetry with gen");
  fit_cmd->add_option("--out", fit.out, "Box JSON path (default stdout)");
  fit_cmd->add_option("--mesh", fit.mesh, "Also write the box as OFF");
  fit_cmd->add_flag("--all-pairs-raw", fit.all_pairs_raw,
                    "All-pairs over every input pair, not hull vertices");
  fit_cmd->add_option("--decimate-threshold", fit.decimate_threshold,
                      "Decimate inputs larger than this (epsilon method)")
      ->capture_default_str();
  fit_cmd->add_option("--decimation-constant", fit.decimation_constant,
                      "Decimation grid denominator")
      ->capture_default_str();
  fit_cmd->add_option("--threads", fit.threads, "Sweep threads (0 = all)")
      ->capture_default_str();
  fit_cmd->add_flag("--strict", fit.strict,
                    "Exit with status 3 on degenerate (zero-volume) input");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a point set");
  gen_cmd->add_option("kind", gen.kind, "paper4 | sphere | rotbox")
      ->required();
  gen_cmd->add_option("params", gen.params, "sphere: N; rotbox: A B C N");
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  gen_cmd->add_option("--rotate-seed", gen.rotate_seed,
                      "paper4: rotation seed, 0 for canonical coordinates")
      ->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Output path (default stdout)");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Tabulate several methods");
  bench_cmd->add_option("input", bench.input, "Point file (.xyz or .csv)")
      ->required();
  bench_cmd->add_option("--methods", bench.methods,
                        "Comma-separated method tags")
      ->delimiter(',');
  bench_cmd->add_option("--improve-tol", bench.improve_tol)
      ->capture_default_str();
  bench_cmd->add_option("--out", bench.out, "CSV path (default stdout)");
  bench_cmd->add_option("--threads", bench.threads, "Sweep threads (0 = all)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*fit_cmd) return RunFit(fit);
    if (*gen_cmd) return RunGen(gen);
    if (*bench_cmd) return RunBench(bench);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const mvbb::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const mvbb::GeometryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
