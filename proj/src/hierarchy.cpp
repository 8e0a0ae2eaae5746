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

#include "hierarchy.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <string>

namespace gazecut {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

void check_options(const HierarchyOptions& options) {
  if (options.block_size < 1) throw Error(ErrorKind::config, "block size must be at least 1");
  if (options.skin_radius < 0) throw Error(ErrorKind::config, "skin radius must be non-negative");
}

struct Stages {
  CutResult coarse;
  StereoGraph fine_graph;
  double seconds = 0;
};

Stages coarse_stage(const CostVolume& volume, const EnergyParams& params,
                    const HierarchyOptions& options) {
  check_options(options);
  const auto start = Clock::now();
  Stages st;
  const CoarseProblem coarse = coarsen(volume, params, options.block_size);
  st.coarse = solve_exact(coarse.volume, coarse.params, options.solve);
  const std::vector<LabelInterval> skin =
      thin_skin(st.coarse.labeling, volume.width, volume.height, volume.labels,
                options.block_size, options.skin_radius);
  st.fine_graph = build_graph(volume, params, skin);
  st.seconds = seconds_since(start);
  return st;
}

}  // namespace

BlockSpec BlockSpec::of(int width, int height, int labels, int block_size) {
  if (block_size < 1) throw Error(ErrorKind::config, "block size must be at least 1");
  return {block_size, ceil_div(width, block_size), ceil_div(height, block_size),
          ceil_div(labels, block_size)};
}

CoarseProblem coarsen(const CostVolume& fine, const EnergyParams& params, int block_size) {
  CoarseProblem out;
  out.spec = BlockSpec::of(fine.width, fine.height, fine.labels, block_size);
  const int b = block_size;
  out.volume = CostVolume(out.spec.coarse_width, out.spec.coarse_height, out.spec.coarse_labels);
  for (int y = 0; y < fine.height; ++y) {
    for (int x = 0; x < fine.width; ++x) {
      for (int k = 0; k < fine.labels; ++k) {
        Cost& c = out.volume.at(x / b, y / b, k / b);
        c = saturating_add(c, fine.at(x, y, k));
      }
    }
  }
  out.params = params;
  out.params.penalty = params.penalty * b;
  return out;
}

std::vector<LabelInterval> thin_skin(const Labeling& coarse, int fine_width, int fine_height,
                                     int fine_labels, int block_size, int radius) {
  const int b = block_size;
  if (coarse.width != ceil_div(fine_width, b) || coarse.height != ceil_div(fine_height, b)) {
    throw Error(ErrorKind::internal, "thin skin: coarse labeling does not match the block grid");
  }
  std::vector<LabelInterval> out(static_cast<std::size_t>(fine_width) * fine_height);
  for (int y = 0; y < fine_height; ++y) {
    for (int x = 0; x < fine_width; ++x) {
      const long long d = coarse.at(x / b, y / b);
      const long long lo = std::max<long long>(0, b * (d - radius));
      const long long hi = std::min<long long>(fine_labels - 1, b * (d + radius + 1) - 1);
      out[static_cast<std::size_t>(y) * fine_width + x] = {static_cast<int>(lo),
                                                           static_cast<int>(hi)};
    }
  }
  return out;
}

std::vector<std::uint32_t> node_blocks(const StereoGraph& g, int block_size) {
  const int b = block_size;
  const BlockSpec spec = BlockSpec::of(g.width, g.height, g.labels, b);
  const std::uint64_t blocks = static_cast<std::uint64_t>(spec.coarse_width) *
                               spec.coarse_height * std::max(spec.coarse_labels, 1);
  if (blocks >= std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorKind::config, "too many blocks");
  }
  std::vector<std::uint32_t> out(g.network.nodes(), std::numeric_limits<std::uint32_t>::max());
  for (int y = 0; y < g.height; ++y) {
    for (int x = 0; x < g.width; ++x) {
      const int u = y * g.width + x;
      const std::uint32_t column =
          static_cast<std::uint32_t>((y / b) * spec.coarse_width + x / b) * spec.coarse_labels;
      for (int i = g.interval[u].lo + 1; i <= g.interval[u].hi; ++i) {
        out[g.node(u, i)] = column + static_cast<std::uint32_t>((i - 1) / b);
      }
    }
  }
  return out;
}

HierarchyResult solve_level1(const CostVolume& volume, const EnergyParams& params,
                             const HierarchyOptions& options) {
  Stages st = coarse_stage(volume, params, options);
  HierarchyResult out;
  out.skin_nodes = static_cast<long long>(st.fine_graph.network.nodes()) - 2;
  out.fine = solve_graph(st.fine_graph, options.solve);
  if (out.fine.stats.termination != Termination::converged) {
    throw Error(ErrorKind::solver, "level 1: fine solve stopped at the iteration cap");
  }
  out.fine.seconds.build += st.seconds;
  out.coarse = std::move(st.coarse);
  return out;
}

HierarchyResult solve_level2(const CostVolume& volume, const EnergyParams& params,
                             const HierarchyOptions& options) {
  Stages st = coarse_stage(volume, params, options);
  HierarchyResult out;
  out.skin_nodes = static_cast<long long>(st.fine_graph.network.nodes()) - 2;
  const std::vector<std::uint32_t> blocks = node_blocks(st.fine_graph, options.block_size);
  PushRelabelOptions pr;
  pr.rounds_per_sweep = options.solve.rounds_per_sweep;
  pr.wave_iterations = options.wave_iterations;
  pr.block_of = blocks;
  pr.max_iterations = options.max_iterations;
  SolveOptions solve = options.solve;
  solve.solver = SolverKind::push_relabel;
  solve.max_iterations = 0;
  out.fine = solve_graph(st.fine_graph, solve, &pr);
  if (out.fine.stats.termination == Termination::iteration_cap) {
    throw Error(ErrorKind::solver,
                "level 2: no convergence after " + std::to_string(out.fine.stats.iterations) +
                    " iterations (" + std::to_string(out.fine.stats.pushes) + " pushes)");
  }
  out.fine.seconds.build += st.seconds;
  out.coarse = std::move(st.coarse);
  return out;
}

}  // namespace gazecut
