// Copyright 2026 The gazecut Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

// Acceptance checks on the Tsukuba pair. Reads scene1.row3.col1.ppm (left),
// scene1.row3.col3.ppm (right) and truedisp.row3.col3.pgm from the directory
// in GAZECUT_TSUKUBA_DIR. GAZECUT_TSUKUBA_GT_SCALE and
// GAZECUT_TSUKUBA_MASK_BORDER override the ground-truth scale (8) and the
// evaluation border (0).
//
// Without the data every criterion is reported as FAIL and the exit status
// is 77, which the test harness records as skipped rather than passed.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "eval.hpp"
#include "geometry.hpp"
#include "graphcut.hpp"
#include "hierarchy.hpp"
#include "imaging.hpp"

using namespace gazecut;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(bool ok, const char* id, const std::string& detail) {
  std::printf("%s criterion %s: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  failures += !ok;
}

int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  return v != nullptr && *v != '\0' ? std::atoi(v) : fallback;
}

bool within(double value, double target, double tolerance) {
  return std::abs(value - target) <= tolerance * target;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

}  // namespace

int main() {
  namespace fs = std::filesystem;
  const char* dir_env = std::getenv("GAZECUT_TSUKUBA_DIR");
  const fs::path dir = dir_env != nullptr ? dir_env : "";
  const fs::path left = dir / "scene1.row3.col1.ppm";
  const fs::path right = dir / "scene1.row3.col3.ppm";
  const fs::path truth = dir / "truedisp.row3.col3.pgm";
  if (dir_env == nullptr || !fs::exists(left) || !fs::exists(right) || !fs::exists(truth)) {
    const std::string why =
        dir_env == nullptr ? "GAZECUT_TSUKUBA_DIR is not set"
                           : "Tsukuba files not found in " + dir.string();
    report(false, "1", "not evaluated: " + why);
    report(false, "4", "not evaluated: " + why);
    report(false, "5", "not evaluated: " + why);
    std::printf("SOME FAILED (no data)\n");
    return 77;
  }

  const int scale = env_int("GAZECUT_TSUKUBA_GT_SCALE", 8);
  const int border = env_int("GAZECUT_TSUKUBA_MASK_BORDER", 0);
  const StereoPair pair = load_stereo_pair(left, right);
  const Cuboid c = cuboid_from_disparity_range(pair.width(), pair.height(), 10, 28, 7, 372);
  const CostVolume v = build_cost_volume(c, pair);
  const GroundTruthDepth gt = ground_truth_to_depth(load_pgm(truth), scale, c, {border});
  std::printf("cuboid %dx%dx%d, ground truth: %d sites valid, %d out of range, %d collisions\n",
              c.gaze_extent, c.row_extent, c.labels(), gt.valid_count(), gt.out_of_range,
              gt.collisions);

  const EnergyParams p{14, 1023, false};
  auto t0 = Clock::now();
  const CutResult exact = solve_exact(v, p);
  const double t_exact = std::chrono::duration<double>(Clock::now() - t0).count();
  const ErrorReport e0 = error_count(exact.labeling, gt);
  report(within(static_cast<double>(e0.total), 11578, 0.15) && e0.exact_percent() >= 90.0, "1",
         fmt("exact error %lld (want 11578 +-15%%), %.2f%% exact (want >= 90), %.1f s",
             e0.total, e0.exact_percent(), t_exact));

  struct Rung {
    MethodConfig method;
    double target;
  };
  const std::vector<Rung> ladder = {{{1, 2}, 14624}, {{1, 3}, 20657}, {{2, 3}, 21294}};
  bool ladder_ok = true;
  std::string detail;
  std::vector<Cost> energy;
  for (const Rung& r : ladder) {
    HierarchyOptions o;
    o.block_size = r.method.block_size;
    t0 = Clock::now();
    const CutResult res = solve_method(v, p, r.method, o);
    const double t = std::chrono::duration<double>(Clock::now() - t0).count();
    const ErrorReport e = error_count(res.labeling, gt);
    const bool ok = within(static_cast<double>(e.total), r.target, 0.20);
    ladder_ok = ladder_ok && ok;
    energy.push_back(res.energy);
    detail += fmt("%s error %lld (want %.0f +-20%%) %.1f%% %.1f s; ", method_id(r.method).c_str(),
                  e.total, r.target, e.exact_percent(), t);
  }
  const bool monotone = exact.energy <= energy[0] && exact.energy <= energy[1] &&
                        energy[1] <= energy[2];
  detail += fmt("energies exact %lld, l1b2 %lld, l1b3 %lld, l2b3 %lld (%s)",
                static_cast<long long>(exact.energy), static_cast<long long>(energy[0]),
                static_cast<long long>(energy[1]), static_cast<long long>(energy[2]),
                monotone ? "monotone" : "NOT monotone");
  report(ladder_ok && monotone, "4", detail);

  std::vector<Cost> penalties;
  for (Cost q = 2; q <= 30; q += 2) penalties.push_back(q);
  const auto sweep = sweep_penalty(v, &gt, penalties, 1023, false, SolveOptions{});
  Cost best = -1;
  long long best_error = -1;
  std::string curve;
  for (const SweepRecord& r : sweep) {
    curve += fmt(" %lld:%lld", static_cast<long long>(r.penalty), r.error->total);
    if (best < 0 || r.error->total < best_error) {
      best = r.penalty;
      best_error = r.error->total;
    }
  }
  report(best == 12 || best == 14 || best == 16, "5",
         fmt("minimum error %lld at penalty %lld (want 12, 14 or 16); curve%s", best_error,
             static_cast<long long>(best), curve.c_str()));

  std::printf("%s\n", failures == 0 ? "ALL PASS" : "SOME FAILED");
  return failures == 0 ? 0 : 1;
}
