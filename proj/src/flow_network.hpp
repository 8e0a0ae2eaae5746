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
#include <iosfwd>
#include <span>
#include <vector>

#include "common.hpp"

namespace gazecut {

using NodeId = std::uint32_t;
using ArcId = std::uint32_t;

/// Residual flow network in flat CSR form. Every arc is stored together with
/// its reverse residual arc; a pair (u, v, c_uv, c_vu) merges two antiparallel
/// arcs. Capacities are kept so the flow on each arc can be recovered.
class FlowNetwork {
 public:
  FlowNetwork() = default;

  /// Allocates storage for `pair_degree[u]` pair endpoints at node u.
  /// Arcs are then placed with add_pair() until every slot is filled.
  FlowNetwork(NodeId nodes, NodeId source, NodeId sink, std::span<const ArcId> pair_degree);

  /// Returns the id of the u -> v arc.
  ArcId add_pair(NodeId u, NodeId v, Cost cap_uv, Cost cap_vu);

  NodeId nodes() const { return static_cast<NodeId>(first_.size() - 1); }
  ArcId arcs() const { return static_cast<ArcId>(head_.size()); }
  NodeId source() const { return source_; }
  NodeId sink() const { return sink_; }

  ArcId first_arc(NodeId u) const { return first_[u]; }
  ArcId last_arc(NodeId u) const { return first_[u + 1]; }
  NodeId head(ArcId a) const { return head_[a]; }
  ArcId reverse(ArcId a) const { return reverse_[a]; }
  Cost capacity(ArcId a) const { return capacity_[a]; }
  Cost residual(ArcId a) const { return residual_[a]; }

  /// Moves `amount` units along arc a.
  void push(ArcId a, Cost amount) {
    residual_[a] -= amount;
    residual_[reverse_[a]] += amount;
  }

  /// Net flow along arc a (negative when flow runs the other way).
  Cost flow(ArcId a) const { return capacity_[a] - residual_[a]; }

  /// Net flow leaving the source.
  Cost flow_value() const;

  /// Restores the zero flow.
  void reset_flow() { residual_ = capacity_; }

  /// Net excess (inflow - outflow) of a node.
  Cost excess(NodeId u) const;

  /// Number of original arcs with positive capacity.
  std::size_t positive_arcs() const;

  /// Every slot allocated by the constructor has been filled.
  bool complete() const;

 private:
  std::vector<ArcId> first_;  // nodes + 1
  std::vector<ArcId> fill_;   // next free slot per node while building
  std::vector<NodeId> head_;
  std::vector<ArcId> reverse_;
  std::vector<Cost> capacity_;
  std::vector<Cost> residual_;
  NodeId source_ = 0;
  NodeId sink_ = 1;
};

/// Convenience builder for ad-hoc networks (tests, random instances).
class FlowNetworkBuilder {
 public:
  FlowNetworkBuilder(NodeId nodes, NodeId source, NodeId sink);
  void add_arc(NodeId u, NodeId v, Cost capacity, Cost reverse_capacity = 0);
  FlowNetwork build() const;

 private:
  struct Pair {
    NodeId u, v;
    Cost cap_uv, cap_vu;
  };
  NodeId nodes_;
  NodeId source_;
  NodeId sink_;
  std::vector<Pair> pairs_;
};

/// Source-reachable nodes in the residual graph (flag per node).
std::vector<std::uint8_t> source_reachable(const FlowNetwork& net);

/// Nodes that can reach the sink in the residual graph.
std::vector<std::uint8_t> sink_reaching(const FlowNetwork& net);

/// Capacity of the cut (S, V \ S) given a source-side flag per node.
Cost cut_capacity(const FlowNetwork& net, std::span<const std::uint8_t> source_side);

/// Text dump: a "nodes N source S sink T" line, then one "u v capacity" line
/// per original arc with positive capacity, in arc order.
void write_graph_dump(const FlowNetwork& net, std::ostream& out);

}  // namespace gazecut
