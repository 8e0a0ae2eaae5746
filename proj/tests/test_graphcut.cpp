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

#include "doctest.h"

#include <numeric>
#include <random>

#include "graphcut.hpp"
#include "oracle.hpp"

using namespace gazecut;

namespace {

CostVolume random_volume(std::mt19937_64& rng, int w, int h, int m, int max_cost) {
  CostVolume v(w, h, m);
  for (Cost& c : v.cost) c = static_cast<Cost>(rng() % (max_cost + 1));
  return v;
}

bool lipschitz(const Labeling& l) {
  for (int y = 0; y < l.height; ++y) {
    for (int x = 0; x < l.width; ++x) {
      if (x + 1 < l.width && std::abs(l.at(x, y) - l.at(x + 1, y)) > 1) return false;
      if (y + 1 < l.height && std::abs(l.at(x, y) - l.at(x, y + 1)) > 1) return false;
    }
  }
  return true;
}

void check_against_oracle(const CostVolume& v, const EnergyParams& p, SolverKind solver) {
  SolveOptions o;
  o.solver = solver;
  const CutResult r = solve_exact(v, p, o);
  const oracle::Minimum best = oracle::brute_force(v.width, v.height, v.labels, v.cost,
                                                   p.penalty, p.inhibit, p.hard_inhibit);
  CHECK(r.energy == best.energy);
  CHECK(r.flow + r.constant == r.energy);
  CHECK(total_energy(r.labeling, v, p) == r.energy);
  // minimal source side = pointwise smallest optimal labeling
  CHECK(r.labeling.label == best.labels);
}

}  // namespace

TEST_CASE("graph size") {
  CHECK(expected_node_count(372LL * 288, 24) == 2464130);
  const EnergyParams p{14, 1023, false};
  const long long pairs = 371LL * 288 + 372LL * 287;
  CHECK(expected_arc_count(372LL * 288, pairs, 24, p) == 24153336);

  std::mt19937_64 rng(1);
  for (int m = 1; m <= 5; ++m) {
    for (Cost pen : {0, 3}) {
      for (Cost inh : {0, 7}) {
        const CostVolume v = random_volume(rng, 3, 2, m, 9);
        const EnergyParams q{pen, inh, false};
        const StereoGraph g = build_graph(v, q);
        CHECK(g.network.nodes() == expected_node_count(6, m));
        CHECK(static_cast<long long>(g.structural_arcs) == expected_arc_count(6, 7, m, q));
        CHECK(g.network.complete());
        CHECK(g.constant == (m == 1 ? std::accumulate(v.cost.begin(), v.cost.end(), Cost{0})
                                    : 0));
      }
    }
  }
}

TEST_CASE("one site, m labels") {
  CostVolume v(1, 1, 5);
  v.cost = {4, 6, 2, 8, 3};
  const StereoGraph g = build_graph(v, EnergyParams{});
  CHECK(g.network.nodes() == 5 - 1 + 2);
  // m data arcs from chain plus m-2 uncuttable reverses between inner nodes
  CHECK(g.structural_arcs == 5 + 3);
  const CutResult r = solve_exact(v, EnergyParams{});
  CHECK(r.labeling.at(0, 0) == 2);
  CHECK(r.energy == 2);
}

TEST_CASE("two adjacent sites, m = 2, all four labelings") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    const CostVolume v = random_volume(rng, 2, 1, 2, 20);
    const EnergyParams p{static_cast<Cost>(rng() % 15), 1023, false};
    Cost best = kUncuttable;
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        best = std::min(best, v.at(0, 0, a) + v.at(1, 0, b) + (a != b ? p.penalty : 0));
      }
    }
    CHECK(solve_exact(v, p).energy == best);
  }
}

TEST_CASE("2x2 sites, m = 3 against exhaustive search") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const CostVolume v = random_volume(rng, 2, 2, 3, 30);
    const EnergyParams p{static_cast<Cost>(rng() % 12), static_cast<Cost>(rng() % 40), false};
    check_against_oracle(v, p, SolverKind::push_relabel);
    check_against_oracle(v, p, SolverKind::reference);
  }
}

TEST_CASE("random 3x3x4 instances: optimum and cut-cost identity") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 100; ++t) {
    const CostVolume v = random_volume(rng, 3, 3, 4, 25);
    const EnergyParams p{static_cast<Cost>(rng() % 10), static_cast<Cost>(rng() % 30), false};
    check_against_oracle(v, p, SolverKind::push_relabel);
  }
}

TEST_CASE("hard inhibit") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 60; ++t) {
    const int w = 1 + static_cast<int>(rng() % 3);
    const int h = 1 + static_cast<int>(rng() % 3);
    const CostVolume v = random_volume(rng, w, h, 5, 60);
    const EnergyParams p{static_cast<Cost>(rng() % 5), 0, true};
    const CutResult r = solve_exact(v, p);
    CHECK(lipschitz(r.labeling));
    CHECK(r.flow + r.constant == r.energy);
    const oracle::Minimum best =
        oracle::brute_force(w, h, 5, v.cost, p.penalty, 0, true);
    CHECK(r.energy == best.energy);
    CHECK(r.labeling.label == best.labels);
  }
}

TEST_CASE("zero data terms give energy 0") {
  CostVolume v(4, 3, 6);
  const CutResult r = solve_exact(v, EnergyParams{14, 1023, false});
  CHECK(r.energy == 0);
  CHECK(r.flow == 0);
  for (int k : r.labeling.label) CHECK(k == r.labeling.label[0]);
}

TEST_CASE("label 0 expensive: every site avoids it") {
  CostVolume v(3, 3, 4);
  for (int y = 0; y < 3; ++y) {
    for (int x = 0; x < 3; ++x) v.at(x, y, 0) = 9;
  }
  const CutResult r = solve_exact(v, EnergyParams{14, 1023, false});
  CHECK(r.energy == 0);
  for (int k : r.labeling.label) CHECK(k == 1);
}

TEST_CASE("restricted graph equals brute force over the intervals") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 80; ++t) {
    const int w = 1 + static_cast<int>(rng() % 3);
    const int h = 1 + static_cast<int>(rng() % 3);
    const int m = 2 + static_cast<int>(rng() % 4);
    const CostVolume v = random_volume(rng, w, h, m, 30);
    const EnergyParams p{static_cast<Cost>(rng() % 8), static_cast<Cost>(rng() % 20), false};
    std::vector<LabelInterval> iv(static_cast<std::size_t>(w) * h);
    std::vector<int> lo, hi;
    for (auto& i : iv) {
      const int a = static_cast<int>(rng() % m);
      const int b = static_cast<int>(rng() % m);
      i = {std::min(a, b), std::max(a, b)};
      lo.push_back(i.lo);
      hi.push_back(i.hi);
    }
    StereoGraph g = build_graph(v, p, iv);
    const CutResult r = solve_graph(g, SolveOptions{});
    const oracle::Minimum best =
        oracle::brute_force(w, h, m, v.cost, p.penalty, p.inhibit, false, lo, hi);
    CHECK(r.energy == best.energy);
    CHECK(r.energy == r.flow + g.constant);
    CHECK(total_energy(r.labeling, v, p) == r.energy);
    for (int s = 0; s < w * h; ++s) {
      CHECK(r.labeling.label[s] >= iv[s].lo);
      CHECK(r.labeling.label[s] <= iv[s].hi);
    }
  }
}

TEST_CASE("close_intervals") {
  std::vector<LabelInterval> iv = {{5, 5}, {0, 9}, {0, 9}};
  REQUIRE(close_intervals(iv, 3, 1));
  CHECK(iv[1] == LabelInterval{4, 6});
  CHECK(iv[2] == LabelInterval{3, 7});

  std::vector<LabelInterval> bad = {{0, 0}, {0, 9}, {5, 9}};
  CHECK_FALSE(close_intervals(bad, 3, 1));

  CostVolume v(3, 1, 10);
  CHECK_THROWS_AS(build_graph(v, EnergyParams{1, 0, true},
                              std::vector<LabelInterval>{{0, 0}, {0, 9}, {5, 9}}),
                  Error);
}

TEST_CASE("extract_labeling rejects a chain cut twice") {
  CostVolume v(1, 1, 4);
  const StereoGraph g = build_graph(v, EnergyParams{});
  std::vector<std::uint8_t> side(g.network.nodes(), 0);
  side[StereoGraph::kSource] = 1;
  side[g.node(0, 2)] = 1;  // level 1 on the sink side, level 2 on the source side
  try {
    extract_labeling(g, side);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::internal);
  }
  side[g.node(0, 1)] = 1;
  CHECK(extract_labeling(g, side).at(0, 0) == 2);
}

TEST_CASE("solvers agree on a mid-sized grid") {
  std::mt19937_64 rng(7);
  const CostVolume v = random_volume(rng, 24, 18, 9, 200);
  const EnergyParams p{14, 60, false};
  SolveOptions ref;
  ref.solver = SolverKind::reference;
  const CutResult a = solve_exact(v, p, ref);
  for (int rounds : {1, 4, 8, 32}) {
    SolveOptions o;
    o.rounds_per_sweep = rounds;
    const CutResult b = solve_exact(v, p, o);
    CHECK(a.flow == b.flow);
    CHECK(a.labeling == b.labeling);
  }
  SolveOptions threaded;
  threaded.threads = 3;
  CHECK(solve_exact(v, p, threaded).labeling == a.labeling);
}
