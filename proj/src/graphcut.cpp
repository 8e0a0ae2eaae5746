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

#include "graphcut.hpp"

#include <algorithm>
#include <chrono>
#include <string>

namespace gazecut {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Walks every original arc of the (possibly restricted) graph. `directed`
// receives arcs between graph nodes after contraction; `both` receives
// antiparallel arc pairs between two free nodes: data arcs with their
// uncuttable reverse, and the two same-level penalty arcs.
template <class Directed, class Both>
void emit_arcs(const StereoGraph& g, const CostVolume& volume, const EnergyParams& params,
               Directed&& directed, Both&& both) {
  auto free_pair = [](NodeId a, NodeId b) {
    return a != StereoGraph::kSource && a != StereoGraph::kSink && b != StereoGraph::kSource &&
           b != StereoGraph::kSink;
  };
  const int m = g.labels;
  const Cost penalty = params.penalty;
  const Cost inhibit = params.effective_inhibit();
  for (int y = 0; y < g.height; ++y) {
    for (int x = 0; x < g.width; ++x) {
      const int u = y * g.width + x;
      const std::span<const Cost> data = volume.site(x, y);
      const LabelInterval iv = g.interval[u];
      // Data arcs below lo join two source nodes, above hi two sink nodes.
      for (int k = iv.lo; k <= iv.hi; ++k) {
        const NodeId a = g.node(u, k);
        const NodeId b = g.node(u, k + 1);
        if (free_pair(a, b)) {
          both(a, b, data[k], kUncuttable);
        } else {
          directed(a, b, data[k]);
        }
      }
      for (int dir = 0; dir < 2; ++dir) {
        const int nx = dir == 0 ? x + 1 : x;
        const int ny = dir == 0 ? y : y + 1;
        if (nx >= g.width || ny >= g.height) continue;
        const int v = ny * g.width + nx;
        if (penalty > 0) {
          for (int i = 1; i < m; ++i) {
            const NodeId a = g.node(u, i);
            const NodeId b = g.node(v, i);
            if (free_pair(a, b)) {
              both(a, b, penalty, penalty);
            } else {
              directed(a, b, penalty);
              directed(b, a, penalty);
            }
          }
        }
        if (inhibit > 0) {
          for (int i = 2; i < m; ++i) {
            directed(g.node(u, i), g.node(v, i - 1), inhibit);
            directed(g.node(v, i), g.node(u, i - 1), inhibit);
          }
        }
      }
    }
  }
}

void check_intervals(std::span<const LabelInterval> intervals, int sites, int labels) {
  if (intervals.size() != static_cast<std::size_t>(sites)) {
    throw Error(ErrorKind::config, "label intervals: expected one per site");
  }
  for (const LabelInterval& iv : intervals) {
    if (iv.lo < 0 || iv.hi >= labels || iv.lo > iv.hi) {
      throw Error(ErrorKind::config, "label intervals: empty or out of range interval");
    }
  }
}

}  // namespace

long long expected_node_count(long long sites, int labels) {
  return sites * (labels - 1) + 2;
}

long long expected_arc_count(long long sites, long long pairs, int labels,
                             const EnergyParams& params) {
  const long long m = labels;
  const long long inner = std::max<long long>(m - 2, 0);
  long long per_pair = 0;
  if (params.penalty > 0) per_pair += 2 * (m - 1);
  if (params.effective_inhibit() > 0) per_pair += 2 * inner;
  return sites * (m + inner) + pairs * per_pair;
}

bool close_intervals(std::vector<LabelInterval>& iv, int width, int height) {
  // Two raster passes give the exact L1 distance transform on the grid:
  // lo(p) = max_q lo(q) - |p - q|, hi(p) = min_q hi(q) + |p - q|.
  auto relax = [&](int p, int q) {
    iv[p].lo = std::max(iv[p].lo, iv[q].lo - 1);
    iv[p].hi = std::min(iv[p].hi, iv[q].hi + 1);
  };
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const int p = y * width + x;
      if (x > 0) relax(p, p - 1);
      if (y > 0) relax(p, p - width);
    }
  }
  for (int y = height - 1; y >= 0; --y) {
    for (int x = width - 1; x >= 0; --x) {
      const int p = y * width + x;
      if (x + 1 < width) relax(p, p + 1);
      if (y + 1 < height) relax(p, p + width);
    }
  }
  return std::all_of(iv.begin(), iv.end(), [](const LabelInterval& i) { return i.lo <= i.hi; });
}

StereoGraph build_graph(const CostVolume& volume, const EnergyParams& params,
                        std::span<const LabelInterval> intervals) {
  if (params.penalty < 0 || params.inhibit < 0) {
    throw Error(ErrorKind::config, "penalty and inhibit must be non-negative");
  }
  if (volume.width < 1 || volume.height < 1 || volume.labels < 1) {
    throw Error(ErrorKind::config, "cost volume is empty");
  }
  StereoGraph g;
  g.width = volume.width;
  g.height = volume.height;
  g.labels = volume.labels;
  const int sites = g.sites();
  const int m = g.labels;

  if (intervals.empty()) {
    g.interval.assign(sites, LabelInterval{0, m - 1});
  } else {
    check_intervals(intervals, sites, m);
    g.interval.assign(intervals.begin(), intervals.end());
    if (params.hard_inhibit && !close_intervals(g.interval, g.width, g.height)) {
      throw Error(ErrorKind::solver,
                  "restricted problem is infeasible under the hard inhibit constraint");
    }
  }

  std::uint64_t nodes = 2;
  g.first_node.resize(sites);
  for (int u = 0; u < sites; ++u) {
    g.first_node[u] = static_cast<NodeId>(nodes);
    nodes += g.interval[u].hi - g.interval[u].lo;
  }
  if (nodes >= std::uint64_t{1} << 32) {
    throw Error(ErrorKind::config, "graph has more than 2^32 nodes");
  }
  const NodeId n = static_cast<NodeId>(nodes);
  const NodeId s = StereoGraph::kSource;
  const NodeId t = StereoGraph::kSink;

  // Pass 1: degrees, terminal capacities, constant.
  std::vector<ArcId> degree(n, 0);
  std::vector<Cost> from_source(n, 0);
  std::vector<Cost> to_sink(n, 0);
  std::size_t structural = 0;
  Cost constant = 0;
  auto count_directed = [&](NodeId a, NodeId b, Cost c) {
    if (a == t || b == s || a == b) return;  // never cut
    ++structural;
    if (a == s && b == t) {
      constant = saturating_add(constant, c);
    } else if (a == s) {
      from_source[b] = saturating_add(from_source[b], c);
    } else if (b == t) {
      to_sink[a] = saturating_add(to_sink[a], c);
    } else if (c > 0) {
      ++degree[a];
      ++degree[b];
    }
  };
  auto count_both = [&](NodeId a, NodeId b, Cost, Cost) {
    structural += 2;
    ++degree[a];
    ++degree[b];
  };
  emit_arcs(g, volume, params, count_directed, count_both);
  if (constant >= kUncuttable) {
    throw Error(ErrorKind::solver, "restricted problem forces an uncuttable arc");
  }
  for (NodeId v = 2; v < n; ++v) {
    if (from_source[v] >= kUncuttable || to_sink[v] >= kUncuttable) {
      throw Error(ErrorKind::internal, "uncuttable terminal capacity after interval closure");
    }
    if (from_source[v] > 0) {
      ++degree[s];
      ++degree[v];
    }
    if (to_sink[v] > 0) {
      ++degree[v];
      ++degree[t];
    }
  }

  // Pass 2: place arcs. Terminal arcs go last so chain arcs sit first in
  // each node's adjacency.
  g.network = FlowNetwork(n, s, t, degree);
  FlowNetwork& net = g.network;
  auto place_directed = [&](NodeId a, NodeId b, Cost c) {
    if (a == t || b == s || a == b || a == s || b == t || c <= 0) return;
    net.add_pair(a, b, c, 0);
  };
  auto place_both = [&](NodeId a, NodeId b, Cost ab, Cost ba) { net.add_pair(a, b, ab, ba); };
  emit_arcs(g, volume, params, place_directed, place_both);
  for (NodeId v = 2; v < n; ++v) {
    if (from_source[v] > 0) net.add_pair(s, v, from_source[v], 0);
    if (to_sink[v] > 0) net.add_pair(v, t, to_sink[v], 0);
  }
  if (!net.complete()) throw Error(ErrorKind::internal, "graph build: adjacency not filled");
  g.constant = constant;
  g.structural_arcs = structural;
  return g;
}

StereoGraph build_graph(const Cuboid& cuboid, const StereoPair& pair, const EnergyParams& params) {
  return build_graph(build_cost_volume(cuboid, pair), params);
}

Labeling extract_labeling(const StereoGraph& g, std::span<const std::uint8_t> source_side) {
  if (source_side.size() != g.network.nodes()) {
    throw Error(ErrorKind::internal, "extract: side flags do not match the graph");
  }
  Labeling out(g.width, g.height, g.labels);
  for (int u = 0; u < g.sites(); ++u) {
    const LabelInterval iv = g.interval[u];
    int label = iv.lo;
    bool ended = false;
    for (int i = iv.lo + 1; i <= iv.hi; ++i) {
      const bool on_source = source_side[g.node(u, i)] != 0;
      if (on_source && ended) {
        throw Error(ErrorKind::internal,
                    "extract: chain of site " + std::to_string(u) + " is cut more than once");
      }
      if (on_source) {
        ++label;
      } else {
        ended = true;
      }
    }
    out.label[u] = label;
  }
  return out;
}

Cost saturate_chains(StereoGraph& g) {
  FlowNetwork& net = g.network;
  const NodeId s = StereoGraph::kSource;
  const NodeId t = StereoGraph::kSink;
  auto find_arc = [&](NodeId from, NodeId to) -> ArcId {
    for (ArcId a = net.first_arc(from); a < net.last_arc(from); ++a) {
      if (net.head(a) == to && net.capacity(a) > 0) return a;
    }
    return net.arcs();
  };
  std::vector<ArcId> path;
  Cost total = 0;
  for (int u = 0; u < g.sites(); ++u) {
    const LabelInterval iv = g.interval[u];
    if (iv.lo == iv.hi) continue;
    path.clear();
    NodeId prev = s;
    bool ok = true;
    for (int i = iv.lo + 1; i <= iv.hi + 1 && ok; ++i) {
      const NodeId next = i <= iv.hi ? g.node(u, i) : t;
      const ArcId a = find_arc(prev, next);
      ok = a != net.arcs();
      path.push_back(a);
      prev = next;
    }
    if (!ok) continue;
    Cost bottleneck = kUncuttable;
    for (ArcId a : path) bottleneck = std::min(bottleneck, net.residual(a));
    if (bottleneck <= 0) continue;
    for (ArcId a : path) net.push(a, bottleneck);
    total += bottleneck;
  }
  return total;
}

CutResult solve_graph(StereoGraph& g, const SolveOptions& options,
                      const PushRelabelOptions* override_options) {
  CutResult result;
  result.nodes = g.network.nodes();
  result.arcs = static_cast<long long>(g.structural_arcs);
  result.constant = g.constant;

  auto start = Clock::now();
  if (options.solver == SolverKind::reference && override_options == nullptr) {
    result.stats = maxflow_reference(g.network);
  } else {
    PushRelabelOptions pr;
    if (override_options != nullptr) pr = *override_options;
    pr.rounds_per_sweep = override_options ? pr.rounds_per_sweep : options.rounds_per_sweep;
    if (options.max_iterations > 0) pr.max_iterations = options.max_iterations;
    if (options.chain_init) saturate_chains(g);
    result.stats = maxflow_push_relabel(g.network, pr);
  }
  result.flow = g.network.flow_value();
  result.seconds.flow = seconds_since(start);

  start = Clock::now();
  if (result.stats.termination == Termination::converged) {
    result.source_side = source_reachable(g.network);
  } else {
    result.source_side = sink_reaching(g.network);
    for (auto& f : result.source_side) f = !f;
  }
  result.labeling = extract_labeling(g, result.source_side);
  const Cost cut = cut_capacity(g.network, result.source_side);
  if (result.stats.termination == Termination::converged && cut != result.flow) {
    throw Error(ErrorKind::internal, "solver finished without a maximum flow");
  }
  result.energy = saturating_add(cut, g.constant);
  result.seconds.extract = seconds_since(start);
  return result;
}

CutResult solve_exact(const CostVolume& volume, const EnergyParams& params,
                      const SolveOptions& options) {
  auto start = Clock::now();
  StereoGraph g = build_graph(volume, params);
  const double build = seconds_since(start);
  CutResult result = solve_graph(g, options);
  result.seconds.build = build;
  if (result.stats.termination != Termination::converged) {
    throw Error(ErrorKind::solver, "exact solve stopped at the iteration cap after " +
                                       std::to_string(result.stats.iterations) + " iterations");
  }
  return result;
}

CutResult solve_exact(const Cuboid& cuboid, const StereoPair& pair, const EnergyParams& params,
                      const SolveOptions& options) {
  auto start = Clock::now();
  const CostVolume volume = build_cost_volume(cuboid, pair, options.threads);
  const double volume_seconds = seconds_since(start);
  CutResult result = solve_exact(volume, params, options);
  result.seconds.build += volume_seconds;
  return result;
}

}  // namespace gazecut
