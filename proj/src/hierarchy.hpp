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

#include <vector>

#include "energy.hpp"
#include "graphcut.hpp"

namespace gazecut {

/// b x b x b blocks over (gaze, row, label). Boundary blocks may be partial.
struct BlockSpec {
  int block_size = 1;
  int coarse_width = 0;
  int coarse_height = 0;
  int coarse_labels = 0;

  static BlockSpec of(int width, int height, int labels, int block_size);
};

/// Delegate problem: each coarse term sums the fine terms of its block, and
/// the penalty is scaled by b.
struct CoarseProblem {
  BlockSpec spec;
  CostVolume volume;
  EnergyParams params;
};

CoarseProblem coarsen(const CostVolume& fine, const EnergyParams& params, int block_size);

/// Fine label interval per site: labels whose block lies within `radius`
/// blocks of the site's coarse label, clamped to [0, labels).
std::vector<LabelInterval> thin_skin(const Labeling& coarse, int fine_width, int fine_height,
                                     int fine_labels, int block_size, int radius);

struct HierarchyOptions {
  int block_size = 2;
  int skin_radius = 1;
  SolveOptions solve;
  /// Level 2: global push-relabel iterations before discharge is confined
  /// to blocks. Negative means never confined.
  long long wave_iterations = 2;
  /// Level 2: iteration cap; 0 = unlimited.
  long long max_iterations = 1000000;
};

struct HierarchyResult {
  CutResult fine;
  CutResult coarse;
  long long skin_nodes = 0;  // free nodes of the restricted fine graph
};

/// Coarse exact cut, thin skin, exact cut of the restricted fine graph.
HierarchyResult solve_level1(const CostVolume& volume, const EnergyParams& params,
                             const HierarchyOptions& options);

/// As level 1, but the fine push-relabel confines discharge to b x b x b node
/// blocks after the first wave iterations and stops once no push succeeds.
HierarchyResult solve_level2(const CostVolume& volume, const EnergyParams& params,
                             const HierarchyOptions& options);

/// Block id per node of a graph (terminals get no block).
std::vector<std::uint32_t> node_blocks(const StereoGraph& graph, int block_size);

}  // namespace gazecut
