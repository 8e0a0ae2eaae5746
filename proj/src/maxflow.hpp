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
#include <span>
#include <string_view>
#include <vector>

#include "flow_network.hpp"

namespace gazecut {

enum class Termination {
  converged,      // no augmenting path remains: maximum flow
  stalled,        // a block-confined iteration delivered no excess to a terminal
  iteration_cap,  // stopped by the iteration limit
};

std::string_view to_string(Termination t);

struct SolverStats {
  long long iterations = 0;  // outer loop iterations (sweep + rounds) or BFS phases
  long long sweeps = 0;      // global relabel sweeps
  long long pushes = 0;
  long long relabels = 0;
  long long augmentations = 0;
  Termination termination = Termination::converged;
};

/// Dinic's shortest-augmenting-path solver. Continues from the network's
/// current flow. Single threaded.
SolverStats maxflow_reference(FlowNetwork& net);

struct PushRelabelOptions {
  /// FIFO discharge rounds between two global relabel sweeps.
  int rounds_per_sweep = 8;
  /// Outer iterations before discharge becomes block-confined. Negative means
  /// never confined.
  long long wave_iterations = -1;
  /// Block id per node for confined discharge; terminals are never confined.
  std::span<const std::uint32_t> block_of;
  /// 0 = unlimited.
  long long max_iterations = 0;
  /// Return stranded excess to the source so the result is a true flow.
  bool return_excess = true;
};

/// Preflow push-relabel with FIFO rounds and periodic global relabeling by
/// breadth-first distance sweeps from the sink. Continues from the network's
/// current (feasible) flow. With return_excess the final state is a maximum
/// flow whenever termination == converged.
SolverStats maxflow_push_relabel(FlowNetwork& net, const PushRelabelOptions& options = {});

}  // namespace gazecut
