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

#include "selftest.hpp"

#include <sstream>

#include "geometry.hpp"
#include "graphcut.hpp"
#include "hierarchy.hpp"
#include "maxflow.hpp"

namespace gazecut {

FlowNetwork random_network(std::mt19937_64& rng, int nodes, int arcs, Cost max_capacity) {
  std::uniform_int_distribution<int> pick(0, nodes - 1);
  std::uniform_int_distribution<Cost> cap(0, max_capacity);
  FlowNetworkBuilder b(nodes, 0, nodes - 1);
  for (int i = 0; i < arcs; ++i) {
    const int u = pick(rng);
    const int v = pick(rng);
    if (u == v) continue;
    b.add_arc(u, v, cap(rng), rng() % 4 == 0 ? cap(rng) : 0);
  }
  return b.build();
}

CostVolume random_volume(std::mt19937_64& rng, int width, int height, int labels,
                         Cost max_cost) {
  std::uniform_int_distribution<Cost> dist(0, max_cost);
  CostVolume v(width, height, labels);
  for (Cost& c : v.cost) c = dist(rng);
  return v;
}

Cost brute_force_minimum(const CostVolume& v, const EnergyParams& params) {
  const int n = v.width * v.height;
  const int m = v.labels;
  auto pair_cost = [&](int a, int b) -> Cost {
    const Cost d = a > b ? a - b : b - a;
    if (d <= 1) return params.penalty * d;
    if (params.hard_inhibit) return kUncuttable;
    return params.penalty * d + params.inhibit * (d - 1);
  };
  std::vector<int> x(n, 0);
  Cost best = kUncuttable;
  for (;;) {
    Cost e = 0;
    for (int s = 0; s < n; ++s) e += v.cost[static_cast<std::size_t>(s) * m + x[s]];
    for (int row = 0; row < v.height; ++row) {
      for (int col = 0; col < v.width; ++col) {
        const int s = row * v.width + col;
        if (col + 1 < v.width) e = saturating_add(e, pair_cost(x[s], x[s + 1]));
        if (row + 1 < v.height) e = saturating_add(e, pair_cost(x[s], x[s + v.width]));
      }
    }
    best = std::min(best, e);
    int i = 0;
    while (i < n && ++x[i] == m) x[i++] = 0;
    if (i == n) break;
  }
  return best;
}

namespace {

class Suite {
 public:
  explicit Suite(std::string name) { r_.name = std::move(name); }
  void check(bool ok, const std::string& what) {
    if (ok) {
      ++r_.passed;
      return;
    }
    if (r_.failed++ == 0) r_.first_failure = what;
  }
  SuiteResult result() const { return r_; }

 private:
  SuiteResult r_;
};

SuiteResult transforms(const SelftestOptions& o) {
  Suite s("transforms");
  for (int w = 2; w <= o.max_width; ++w) {
    long long parity_pairs = 0;
    for (int xl = 0; xl < w; ++xl) {
      for (int xr = 0; xr < w; ++xr) {
        parity_pairs += (xl + xr) % 2 == (w - 1) % 2;
        const auto gd = cross_from_pixels(xl, xr, 0, w);
        if (!gd) continue;
        const CrossPoint back = pixels_from_gaze_depth(*gd, w);
        s.check(back == CrossPoint{xl, xr, 0},
                "pixel round trip w=" + std::to_string(w) + " xl=" + std::to_string(xl) +
                    " xr=" + std::to_string(xr));
      }
    }
    if (w % 2 == 0) {
      s.check(2 * parity_pairs == static_cast<long long>(w) * w,
              "half of the pixel pairs are cross points, w=" + std::to_string(w));
    }
    // (x, dis) -> (W,H,S) -> (x, dis) on a centered cuboid: exact at
    // cross-point disparities (dis = w-1 mod 2), off by at most one elsewhere.
    const int dmax = (w - 1) / 2;
    Cuboid c;
    c.image_width = w;
    c.image_height = 1;
    c.gaze_min = -((w - 1) / 2);
    c.gaze_extent = 2 * ((w - 1) / 2) + 1;
    c.row_extent = 1;
    c.depth_min = 0;
    c.depth_extent = dmax + 1;
    c.center_offsets();
    for (int x = 0; x < w; ++x) {
      for (int dis = 0; x + dis < w; ++dis) {
        const std::string id =
            "w=" + std::to_string(w) + " x=" + std::to_string(x) + " dis=" + std::to_string(dis);
        const Whs whs = whs_from_disparity(x, 0, dis, c);
        if (dis % 2 == (w - 1) % 2) {
          const PixelDisparity p = disparity_from_whs(whs, c);
          s.check(p == PixelDisparity{x, 0, dis}, "disparity round trip " + id);
        } else {
          try {
            const PixelDisparity p = disparity_from_whs(whs, c);
            s.check(std::abs(p.dis - dis) <= 1 && p.y == 0, "disparity shift above one " + id);
          } catch (const Error&) {
            s.check(true, id);
          }
        }
      }
    }
  }
  return s.result();
}

SuiteResult solver_equivalence(const SelftestOptions& o, std::mt19937_64& rng) {
  Suite s("solver_equivalence");
  std::uniform_int_distribution<int> size(2, 60);
  for (int i = 0; i < o.networks; ++i) {
    const int n = size(rng);
    FlowNetwork a = random_network(rng, n, n * 4, 20);
    FlowNetwork b = a;
    maxflow_reference(a);
    PushRelabelOptions pr;
    pr.rounds_per_sweep = 1 + static_cast<int>(rng() % 8);
    maxflow_push_relabel(b, pr);
    const auto side = source_reachable(b);
    bool conserved = true;
    for (NodeId u = 0; u < b.nodes(); ++u) {
      if (u != b.source() && u != b.sink()) conserved = conserved && b.excess(u) == 0;
    }
    s.check(a.flow_value() == b.flow_value() && cut_capacity(b, side) == b.flow_value() &&
                conserved,
            "network " + std::to_string(i) + ": push-relabel " + std::to_string(b.flow_value()) +
                " vs reference " + std::to_string(a.flow_value()));
  }
  return s.result();
}

SuiteResult optimality(const SelftestOptions& o, std::mt19937_64& rng, bool hard) {
  Suite s(hard ? "hard_inhibit" : "optimality");
  for (int i = 0; i < o.instances; ++i) {
    const int w = 1 + static_cast<int>(rng() % 3);
    const int h = 1 + static_cast<int>(rng() % 3);
    const int m = 1 + static_cast<int>(rng() % 5);
    const CostVolume v = random_volume(rng, w, h, m, 30);
    EnergyParams p{static_cast<Cost>(rng() % 12), static_cast<Cost>(rng() % 40), hard};
    const CutResult r = solve_exact(v, p);
    const Cost brute = brute_force_minimum(v, p);
    const std::string id = "instance " + std::to_string(i);
    s.check(r.energy == brute, id + ": cut energy " + std::to_string(r.energy) +
                                   " vs brute force " + std::to_string(brute));
    s.check(total_energy(r.labeling, v, p) == r.energy, id + ": cut-cost identity");
    if (hard) {
      bool ok = true;
      for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
          if (x + 1 < w) ok = ok && std::abs(r.labeling.at(x, y) - r.labeling.at(x + 1, y)) <= 1;
          if (y + 1 < h) ok = ok && std::abs(r.labeling.at(x, y) - r.labeling.at(x, y + 1)) <= 1;
        }
      }
      s.check(ok, id + ": neighbor labels differ by more than one");
    }
  }
  return s.result();
}

SuiteResult level1_identity(const SelftestOptions& o, std::mt19937_64& rng) {
  Suite s("level1_identity");
  for (int i = 0; i < o.instances; ++i) {
    const int w = 2 + static_cast<int>(rng() % 6);
    const int h = 2 + static_cast<int>(rng() % 6);
    const int m = 2 + static_cast<int>(rng() % 6);
    const CostVolume v = random_volume(rng, w, h, m, 60);
    EnergyParams p{static_cast<Cost>(rng() % 12), static_cast<Cost>(rng() % 40), false};
    const CutResult exact = solve_exact(v, p);
    HierarchyOptions ho;
    ho.block_size = 1;
    const CutResult l1 = solve_level1(v, p, ho).fine;
    s.check(exact.labeling == l1.labeling && exact.energy == l1.energy,
            "instance " + std::to_string(i) + ": level 1 with block size 1 differs from exact");
  }
  return s.result();
}

}  // namespace

std::vector<SuiteResult> run_selftest(const SelftestOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::vector<SuiteResult> out;
  out.push_back(transforms(options));
  out.push_back(solver_equivalence(options, rng));
  out.push_back(optimality(options, rng, false));
  out.push_back(optimality(options, rng, true));
  out.push_back(level1_identity(options, rng));
  if (options.force_failure) {
    Suite s("forced_failure");
    s.check(false, "failure requested");
    out.push_back(s.result());
  }
  return out;
}

std::string format_selftest(const std::vector<SuiteResult>& results) {
  std::ostringstream out;
  long long passed = 0;
  long long failed = 0;
  for (const SuiteResult& r : results) {
    out << r.name << " passed " << r.passed << " failed " << r.failed << '\n';
    if (r.failed > 0) out << "  first failure: " << r.first_failure << '\n';
    passed += r.passed;
    failed += r.failed;
  }
  out << "total passed " << passed << " failed " << failed << '\n';
  return out.str();
}

}  // namespace gazecut
