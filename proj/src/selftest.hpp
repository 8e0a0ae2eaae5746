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

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "energy.hpp"
#include "flow_network.hpp"

namespace gazecut {

/// Random network with `nodes` nodes (source 0, sink nodes - 1).
FlowNetwork random_network(std::mt19937_64& rng, int nodes, int arcs, Cost max_capacity);

/// Random cost volume with terms in [0, max_cost].
CostVolume random_volume(std::mt19937_64& rng, int width, int height, int labels,
                         Cost max_cost);

/// Minimum energy by enumerating every labeling, with its own energy sum.
Cost brute_force_minimum(const CostVolume& volume, const EnergyParams& params);

struct SuiteResult {
  std::string name;
  long long passed = 0;
  long long failed = 0;
  std::string first_failure;
};

struct SelftestOptions {
  std::uint64_t seed = 20260101;
  int networks = 200;     // solver equivalence instances
  int instances = 100;    // brute-force optimality instances
  int max_width = 32;     // transform round trips for widths 2..max_width
  bool force_failure = false;
};

std::vector<SuiteResult> run_selftest(const SelftestOptions& options);

/// One "name passed failed" line per suite plus the first failure, if any.
std::string format_selftest(const std::vector<SuiteResult>& results);

}  // namespace gazecut
