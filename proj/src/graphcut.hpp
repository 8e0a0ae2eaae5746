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
#include <vector>

#include "energy.hpp"
#include "flow_network.hpp"
#include "maxflow.hpp"

namespace gazecut {

/// Inclusive label range a site may take.
struct LabelInterval {
  int lo = 0;
  int hi = 0;
  friend bool operator==(const LabelInterval&, const LabelInterval&) = default;
};

/// Flow network whose minimum cut encodes a minimum-energy labeling.
///
/// Each site owns a chain source -> n_1 -> ... -> n_{m-1} -> sink. The arc
/// n_k -> n_{k+1} carries the data term of label k and has an uncuttable
/// reverse, so every chain is cut exactly once and the label is the number
/// of chain nodes left on the source side. Between 4-connected sites, arcs
/// u_i <-> v_i carry the penalty and arcs u_i -> v_{i-1}, v_i -> u_{i-1} carry
/// the inhibit; together they reproduce the pairwise term from its second
/// differences.
///
/// With label intervals narrower than [0, m-1], chain nodes at or below a
/// site's interval are merged into the source and those above it into the
/// sink; arcs that are then always cut are folded into `constant`.
struct StereoGraph {
  FlowNetwork network;
  int width = 0;
  int height = 0;
  int labels = 0;
  std::vector<LabelInterval> interval;  // per site
  std::vector<NodeId> first_node;       // per site, node of level lo + 1
  Cost constant = 0;
  std::size_t structural_arcs = 0;      // original arcs, counted before merging terminals

  static constexpr NodeId kSource = 0;
  static constexpr NodeId kSink = 1;

  int sites() const { return width * height; }
  /// Node of chain level i (1..m-1) at a site; source/sink when forced.
  NodeId node(int site, int level) const {
    const LabelInterval& iv = interval[site];
    if (level <= iv.lo) return kSource;
    if (level > iv.hi) return kSink;
    return first_node[site] + static_cast<NodeId>(level - iv.lo - 1);
  }
};

/// Node count of the unrestricted graph: sites * (m - 1) + 2.
long long expected_node_count(long long sites, int labels);
/// Original arc count of the unrestricted graph:
///   sites * (m + max(m - 2, 0)) + pairs * (2(m-1)[penalty > 0] + 2 max(m-2, 0)[inhibit > 0]).
long long expected_arc_count(long long sites, long long pairs, int labels,
                             const EnergyParams& params);

/// Builds the graph for a cost volume. An empty interval span means every
/// site may take every label. In hard-inhibit mode the intervals are first
/// narrowed to the tightest bounds implied by |k_u - k_v| <= 1; an empty
/// result throws a solver error.
StereoGraph build_graph(const CostVolume& volume, const EnergyParams& params,
                        std::span<const LabelInterval> intervals = {});
StereoGraph build_graph(const Cuboid& cuboid, const StereoPair& pair, const EnergyParams& params);

/// Tightest interval bounds under |k_u - k_v| <= 1 on 4-connected sites.
/// Returns false if some interval becomes empty.
bool close_intervals(std::vector<LabelInterval>& intervals, int width, int height);

/// Labels from a source-side node flag. Throws internal error if a chain is
/// cut more than once.
Labeling extract_labeling(const StereoGraph& graph, std::span<const std::uint8_t> source_side);

/// Pushes the bottleneck of every site chain as an initial flow.
Cost saturate_chains(StereoGraph& graph);

enum class SolverKind { push_relabel, reference };

struct SolveOptions {
  SolverKind solver = SolverKind::push_relabel;
  int rounds_per_sweep = 8;
  bool chain_init = true;
  int threads = 1;
  long long max_iterations = 0;
};

struct StageSeconds {
  double build = 0;
  double flow = 0;
  double extract = 0;
};

struct CutResult {
  Cost flow = 0;      // network flow value
  Cost constant = 0;  // always-cut capacity folded out of the network
  Cost energy = 0;    // capacity of the extracted cut plus the constant
  Labeling labeling;
  std::vector<std::uint8_t> source_side;
  SolverStats stats;
  StageSeconds seconds;
  long long nodes = 0;
  long long arcs = 0;
};

/// Solves a built graph and extracts the labeling. A converged solve uses
/// the minimal source side (source reachability); otherwise the cut is the
/// complement of the nodes that still reach the sink.
CutResult solve_graph(StereoGraph& graph, const SolveOptions& options,
                      const PushRelabelOptions* push_relabel_override = nullptr);

CutResult solve_exact(const CostVolume& volume, const EnergyParams& params,
                      const SolveOptions& options = {});
CutResult solve_exact(const Cuboid& cuboid, const StereoPair& pair, const EnergyParams& params,
                      const SolveOptions& options = {});

}  // namespace gazecut
