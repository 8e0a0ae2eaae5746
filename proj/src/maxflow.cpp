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

#include "maxflow.hpp"

#include <algorithm>
#include <limits>

namespace gazecut {

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::converged:
      return "converged";
    case Termination::stalled:
      return "stalled";
    case Termination::iteration_cap:
      return "iteration_cap";
  }
  return "unknown";
}

SolverStats maxflow_reference(FlowNetwork& net) {
  SolverStats stats;
  const NodeId n = net.nodes();
  const NodeId s = net.source();
  const NodeId t = net.sink();
  std::vector<int> level(n);
  std::vector<ArcId> current(n);
  std::vector<NodeId> queue;
  queue.reserve(n);
  std::vector<ArcId> path;  // arcs from s to the top of the search

  for (;;) {
    std::fill(level.begin(), level.end(), -1);
    queue.clear();
    queue.push_back(s);
    level[s] = 0;
    for (std::size_t i = 0; i < queue.size() && level[t] < 0; ++i) {
      const NodeId u = queue[i];
      for (ArcId a = net.first_arc(u); a < net.last_arc(u); ++a) {
        const NodeId v = net.head(a);
        if (level[v] < 0 && net.residual(a) > 0) {
          level[v] = level[u] + 1;
          queue.push_back(v);
        }
      }
    }
    if (level[t] < 0) break;
    ++stats.iterations;
    for (NodeId u = 0; u < n; ++u) current[u] = net.first_arc(u);

    // Blocking flow by repeated depth-first advance/retreat.
    path.clear();
    NodeId u = s;
    for (;;) {
      if (u == t) {
        Cost bottleneck = std::numeric_limits<Cost>::max();
        for (ArcId a : path) bottleneck = std::min(bottleneck, net.residual(a));
        std::size_t cut = path.size();
        for (std::size_t i = 0; i < path.size(); ++i) {
          net.push(path[i], bottleneck);
          if (cut == path.size() && net.residual(path[i]) == 0) cut = i;
        }
        ++stats.augmentations;
        path.resize(cut);
        u = path.empty() ? s : net.head(path.back());
        continue;
      }
      ArcId& a = current[u];
      const ArcId end = net.last_arc(u);
      while (a < end && !(net.residual(a) > 0 && level[net.head(a)] == level[u] + 1)) ++a;
      if (a < end) {
        path.push_back(a);
        u = net.head(a);
        continue;
      }
      // Dead end: retreat.
      if (u == s) break;
      level[u] = -1;
      path.pop_back();
      u = path.empty() ? s : net.head(path.back());
      ++current[u];
    }
  }
  stats.termination = Termination::converged;
  return stats;
}

namespace {

constexpr std::uint32_t kNoBlock = std::numeric_limits<std::uint32_t>::max();

class PushRelabel {
 public:
  PushRelabel(FlowNetwork& net, const PushRelabelOptions& options)
      : net_(net),
        options_(options),
        n_(net.nodes()),
        excess_(n_, 0),
        height_(n_, 0),
        current_(n_, 0),
        queued_(n_, 0) {
    if (!options_.block_of.empty() && options_.block_of.size() != n_) {
      throw Error(ErrorKind::internal, "push-relabel: block map size mismatch");
    }
    if (options_.rounds_per_sweep < 1) {
      throw Error(ErrorKind::config, "push-relabel: rounds per sweep must be positive");
    }
  }

  SolverStats run() {
    const NodeId s = net_.source();
    const NodeId t = net_.sink();
    for (NodeId u = 0; u < n_; ++u) excess_[u] = (u == s || u == t) ? 0 : net_.excess(u);
    for (ArcId a = net_.first_arc(s); a < net_.last_arc(s); ++a) {
      const Cost r = net_.residual(a);
      if (r > 0) {
        net_.push(a, r);
        const NodeId v = net_.head(a);
        if (v != t) excess_[v] += r;
      }
    }

    stats_.termination = Termination::converged;
    for (;;) {
      sweep_from_sink();
      collect_active(n_);
      if (active_.empty()) break;
      if (options_.max_iterations > 0 && stats_.iterations >= options_.max_iterations) {
        stats_.termination = Termination::iteration_cap;
        break;
      }
      const bool confined = !options_.block_of.empty() && options_.wave_iterations >= 0 &&
                            stats_.iterations >= options_.wave_iterations;
      ++stats_.iterations;
      const Cost delivered_before = delivered_;
      for (int round = 0; round < options_.rounds_per_sweep && !active_.empty(); ++round) {
        if (confined) {
          std::stable_sort(active_.begin(), active_.end(), [this](NodeId a, NodeId b) {
            return options_.block_of[a] < options_.block_of[b];
          });
        }
        next_.clear();
        for (NodeId u : active_) {
          queued_[u] = 0;
          discharge(u, confined, n_);
        }
        active_.swap(next_);
      }
      for (NodeId u : active_) queued_[u] = 0;
      if (confined && delivered_ == delivered_before) {
        stats_.termination = Termination::stalled;
        break;
      }
    }

    if (stats_.termination == Termination::converged && options_.return_excess) {
      return_excess();
    }
    return stats_;
  }

 private:
  bool allowed(NodeId u, NodeId v, bool confined) const {
    if (!confined) return true;
    if (v == net_.source() || v == net_.sink()) return true;
    const std::uint32_t bu = options_.block_of[u];
    return bu != kNoBlock && bu == options_.block_of[v];
  }

  // Exact residual distance to `target` for every node; `limit` elsewhere.
  void sweep(NodeId target, NodeId excluded, std::uint32_t limit) {
    ++stats_.sweeps;
    std::fill(height_.begin(), height_.end(), limit);
    bfs_.clear();
    bfs_.push_back(target);
    height_[target] = 0;
    for (std::size_t i = 0; i < bfs_.size(); ++i) {
      const NodeId v = bfs_[i];
      const std::uint32_t hv = height_[v] + 1;
      for (ArcId a = net_.first_arc(v); a < net_.last_arc(v); ++a) {
        const NodeId u = net_.head(a);
        if (height_[u] == limit && u != excluded && net_.residual(net_.reverse(a)) > 0) {
          height_[u] = hv;
          bfs_.push_back(u);
        }
      }
    }
    for (NodeId u = 0; u < n_; ++u) current_[u] = net_.first_arc(u);
  }

  void sweep_from_sink() {
    sweep(net_.sink(), net_.source(), n_);
    height_[net_.source()] = n_;
  }

  void collect_active(std::uint32_t limit) {
    active_.clear();
    for (NodeId u = 0; u < n_; ++u) {
      if (excess_[u] > 0 && height_[u] < limit && u != net_.source() && u != net_.sink()) {
        active_.push_back(u);
        queued_[u] = 1;
      }
    }
  }

  void activate(NodeId v, std::uint32_t limit) {
    if (!queued_[v] && height_[v] < limit) {
      queued_[v] = 1;
      next_.push_back(v);
    }
  }

  // Push/relabel until u has no excess or its height reaches `limit`.
  void discharge(NodeId u, bool confined, std::uint32_t limit) {
    const NodeId s = net_.source();
    const NodeId t = net_.sink();
    const ArcId end = net_.last_arc(u);
    while (excess_[u] > 0) {
      const std::uint32_t target = height_[u] - 1;
      ArcId a = current_[u];
      for (; a < end; ++a) {
        if (net_.residual(a) <= 0) continue;
        const NodeId v = net_.head(a);
        if (height_[v] != target || !allowed(u, v, confined)) continue;
        const Cost delta = std::min(excess_[u], net_.residual(a));
        net_.push(a, delta);
        ++stats_.pushes;
        excess_[u] -= delta;
        if (v != s && v != t) {
          excess_[v] += delta;
          activate(v, limit);
        } else {
          delivered_ += delta;
        }
        if (excess_[u] == 0) break;
      }
      current_[u] = a;
      if (excess_[u] == 0) return;

      std::uint32_t lowest = limit;
      for (ArcId b = net_.first_arc(u); b < end; ++b) {
        if (net_.residual(b) > 0 && allowed(u, net_.head(b), confined)) {
          lowest = std::min(lowest, height_[net_.head(b)]);
        }
      }
      ++stats_.relabels;
      current_[u] = net_.first_arc(u);
      if (std::uint64_t{lowest} + 1 >= limit) {
        height_[u] = limit;
        return;
      }
      height_[u] = lowest + 1;
    }
  }

  // Second phase: send excess that cannot reach the sink back to the source.
  void return_excess() {
    const NodeId s = net_.source();
    const NodeId t = net_.sink();
    const std::uint32_t limit = std::numeric_limits<std::uint32_t>::max();
    sweep(s, t, limit);
    height_[t] = limit;
    active_.clear();
    for (NodeId u = 0; u < n_; ++u) {
      if (u == s || u == t || excess_[u] <= 0) continue;
      if (height_[u] == limit) {
        throw Error(ErrorKind::internal, "push-relabel: stranded excess cannot reach the source");
      }
      active_.push_back(u);
      queued_[u] = 1;
    }
    while (!active_.empty()) {
      next_.clear();
      for (NodeId u : active_) {
        queued_[u] = 0;
        discharge(u, false, limit);
        if (excess_[u] > 0) {
          throw Error(ErrorKind::internal, "push-relabel: excess return did not finish");
        }
      }
      active_.swap(next_);
    }
  }

  FlowNetwork& net_;
  const PushRelabelOptions& options_;
  NodeId n_;
  std::vector<Cost> excess_;
  std::vector<std::uint32_t> height_;
  std::vector<ArcId> current_;
  std::vector<std::uint8_t> queued_;
  std::vector<NodeId> active_;
  std::vector<NodeId> next_;
  std::vector<NodeId> bfs_;
  Cost delivered_ = 0;  // excess absorbed by the terminals
  SolverStats stats_;
};

}  // namespace

SolverStats maxflow_push_relabel(FlowNetwork& net, const PushRelabelOptions& options) {
  return PushRelabel(net, options).run();
}

}  // namespace gazecut
