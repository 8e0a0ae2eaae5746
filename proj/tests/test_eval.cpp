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

#include <random>

#include "eval.hpp"

using namespace gazecut;

namespace {

const std::vector<long long> kPublishedCounts = {76502, 3766, 839, 547, 98, 82, 146, 46, 36, 245};

GroundTruthDepth truth_from(const Labeling& l) {
  GroundTruthDepth gt;
  gt.width = l.width;
  gt.height = l.height;
  gt.label = l.label;
  return gt;
}

CostVolume random_volume(std::mt19937_64& rng, int w, int h, int m, int max_cost) {
  CostVolume v(w, h, m);
  for (Cost& c : v.cost) c = static_cast<Cost>(rng() % (max_cost + 1));
  return v;
}

}  // namespace

TEST_CASE("published histogram reduces to the published error") {
  const ErrorReport r = report_from_histogram(kPublishedCounts);
  CHECK(r.total == 11578);
  CHECK(r.evaluated == 82307);
  CHECK(r.exact_percent() == doctest::Approx(100.0 * 76502 / 82307));
  CHECK(r.exact_percent() > 92.0);
  CHECK(r.exact_percent() < 93.0);
  const std::string text = format_report(r);
  CHECK(text.find("0 76502\n") != std::string::npos);
  CHECK(text.find("10~ 0\n") != std::string::npos);
  CHECK(text.find("error 11578\n") != std::string::npos);
  CHECK(text.find("exact_percent 92.95\n") != std::string::npos);
}

TEST_CASE("bucketed folds the tail") {
  std::vector<long long> h(15, 1);
  const ErrorReport r = report_from_histogram(h);
  const auto b = r.bucketed(10);
  REQUIRE(b.size() == 11);
  CHECK(b[10] == 5);
  CHECK(r.total == 14 * 15 / 2);
}

TEST_CASE("error_count") {
  Labeling l(4, 3, 20);
  for (int i = 0; i < 12; ++i) l.label[i] = i;
  const GroundTruthDepth gt = truth_from(l);

  SUBCASE("identity") {
    const ErrorReport r = error_count(l, gt);
    CHECK(r.total == 0);
    CHECK(r.evaluated == 12);
    CHECK(r.exact_percent() == 100.0);
  }
  SUBCASE("one site off by 9") {
    Labeling off = l;
    off.label[5] += 9;
    const ErrorReport r = error_count(off, gt);
    CHECK(r.total == 9);
    CHECK(r.histogram[9] == 1);
    CHECK(r.histogram[0] == 11);
  }
  SUBCASE("invalid sites are skipped") {
    GroundTruthDepth holes = gt;
    holes.label[0] = -1;
    holes.label[1] = -1;
    Labeling off = l;
    off.label[0] = 19;
    const ErrorReport r = error_count(off, holes);
    CHECK(r.evaluated == 10);
    CHECK(r.total == 0);
  }
  SUBCASE("shift invariance") {
    std::mt19937_64 rng(9);
    Labeling a(4, 3, 20);
    for (int& k : a.label) k = static_cast<int>(rng() % 10);
    const long long base = error_count(a, gt).total;
    Labeling a2 = a;
    GroundTruthDepth gt2 = gt;
    for (int& k : a2.label) k += 5;
    for (int& k : gt2.label) k += 5;
    CHECK(error_count(a2, gt2).total == base);
  }
  SUBCASE("shape mismatch") { CHECK_THROWS_AS(error_count(Labeling(3, 3, 20), gt), Error); }
}

TEST_CASE("method ids") {
  CHECK(method_id({0, 1}) == "exact");
  CHECK(method_id({1, 2}) == "l1b2");
  CHECK(method_id({2, 3}) == "l2b3");
}

TEST_CASE("sweep") {
  std::mt19937_64 rng(10);
  const CostVolume v = random_volume(rng, 10, 8, 6, 90);
  Labeling truth(10, 8, 6);
  for (int& k : truth.label) k = static_cast<int>(rng() % 6);
  const GroundTruthDepth gt = truth_from(truth);

  SUBCASE("penalty 0 is the per-site data optimum") {
    const std::vector<Cost> pens = {0};
    const auto rec = sweep_penalty(v, &gt, pens, 0, false, SolveOptions{});
    REQUIRE(rec.size() == 1);
    Labeling argmin(10, 8, 6);
    for (int y = 0; y < 8; ++y) {
      for (int x = 0; x < 10; ++x) {
        int best = 0;
        for (int k = 1; k < 6; ++k) {
          if (v.at(x, y, k) < v.at(x, y, best)) best = k;
        }
        argmin.at(x, y) = best;
      }
    }
    REQUIRE(rec[0].error);
    CHECK(rec[0].error->total == error_count(argmin, gt).total);
    CHECK(rec[0].energy == total_energy(argmin, v, EnergyParams{0, 0, false}));
  }
  SUBCASE("deterministic CSV across runs and thread counts") {
    const std::vector<Cost> pens = {2, 4, 6, 8, 10};
    const auto a = sweep_penalty(v, &gt, pens, 1023, false, SolveOptions{}, 1);
    const auto b = sweep_penalty(v, &gt, pens, 1023, false, SolveOptions{}, 3);
    CHECK(sweep_csv(a, false) == sweep_csv(b, false));
    CHECK(sweep_csv(a, false).rfind("penalty,inhibit,error,exact_percent,evaluated,flow,energy\n",
                                    0) == 0);
    CHECK(sweep_csv(a, true).find(",seconds\n") != std::string::npos);
    for (std::size_t i = 0; i < pens.size(); ++i) CHECK(a[i].penalty == pens[i]);
  }
  SUBCASE("no ground truth leaves error columns empty") {
    const std::vector<Cost> pens = {4};
    const auto rec = sweep_penalty(v, nullptr, pens, 0, false, SolveOptions{});
    CHECK_FALSE(rec[0].error);
    CHECK(sweep_csv(rec, false).find("\n4,0,,,,") != std::string::npos);
  }
}

TEST_CASE("compare_methods") {
  std::mt19937_64 rng(11);
  const CostVolume v = random_volume(rng, 14, 12, 9, 90);
  Labeling truth(14, 12, 9);
  const GroundTruthDepth gt = truth_from(truth);
  const std::vector<MethodConfig> configs = {{0, 1}, {1, 2}, {1, 3}, {2, 3}};
  const EnergyParams p{14, 200, false};
  const auto rows = compare_methods(v, &gt, p, configs, HierarchyOptions{});
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].energy <= rows[1].energy);
  CHECK(rows[0].energy <= rows[2].energy);
  CHECK(rows[2].energy <= rows[3].energy);
  const std::string csv = comparison_csv(rows, false);
  CHECK(csv.rfind("method,level,block_size,error,exact_percent,evaluated,energy,termination\n",
                  0) == 0);
  CHECK(csv.find("\nl2b3,2,3,") != std::string::npos);
  CHECK(csv == comparison_csv(compare_methods(v, &gt, p, configs, HierarchyOptions{}), false));
}
