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

#include "flow_network.hpp"

#include <ostream>
#include <queue>

namespace gazecut {

FlowNetwork::FlowNetwork(NodeId nodes, NodeId source, NodeId sink,
                         std::span<const ArcId> pair_degree)
    : source_(source), sink_(sink) {
  if (pair_degree.size() != nodes || source >= nodes || sink >= nodes || source == sink) {
    throw Error(ErrorKind::internal, "flow network: bad node layout");
  }
  first_.resize(static_cast<std::size_t>(nodes) + 1);
  std::uint64_t total = 0;
  for (NodeId u = 0; u < nodes; ++u) {
    first_[u] = static_cast<ArcId>(total);
    total += pair_degree[u];
  }
  if (total >= std::uint64_t{1} << 32) {
    throw Error(ErrorKind::config, "flow network: more than 2^32 residual arcs");
  }
  first_[nodes] = static_cast<ArcId>(total);
  fill_.assign(first_.begin(), first_.end() - 1);
  fill_.push_back(first_[nodes]);
  head_.resize(total);
  reverse_.resize(total);
  capacity_.resize(total);
  residual_.resize(total);
}

ArcId FlowNetwork::add_pair(NodeId u, NodeId v, Cost cap_uv, Cost cap_vu) {
  const ArcId a = fill_[u]++;
  const ArcId b = fill_[v]++;
  head_[a] = v;
  head_[b] = u;
  reverse_[a] = b;
  reverse_[b] = a;
  capacity_[a] = residual_[a] = cap_uv;
  capacity_[b] = residual_[b] = cap_vu;
  return a;
}

Cost FlowNetwork::flow_value() const {
  Cost total = 0;
  for (ArcId a = first_[source_]; a < first_[source_ + 1]; ++a) total += flow(a);
  return total;
}

Cost FlowNetwork::excess(NodeId u) const {
  Cost e = 0;
  for (ArcId a = first_[u]; a < first_[u + 1]; ++a) e -= flow(a);
  return e;
}

std::size_t FlowNetwork::positive_arcs() const {
  std::size_t n = 0;
  for (Cost c : capacity_) n += c > 0;
  return n;
}

bool FlowNetwork::complete() const {
  for (NodeId u = 0; u < nodes(); ++u) {
    if (fill_[u] != first_[u + 1]) return false;
  }
  return true;
}

FlowNetworkBuilder::FlowNetworkBuilder(NodeId nodes, NodeId source, NodeId sink)
    : nodes_(nodes), source_(source), sink_(sink) {}

void FlowNetworkBuilder::add_arc(NodeId u, NodeId v, Cost capacity, Cost reverse_capacity) {
  if (u >= nodes_ || v >= nodes_ || u == v) {
    throw Error(ErrorKind::config, "flow network: arc endpoint out of range or self loop");
  }
  if (capacity < 0 || reverse_capacity < 0) {
    throw Error(ErrorKind::config, "flow network: negative capacity");
  }
  pairs_.push_back({u, v, capacity, reverse_capacity});
}

FlowNetwork FlowNetworkBuilder::build() const {
  std::vector<ArcId> degree(nodes_, 0);
  for (const Pair& p : pairs_) {
    ++degree[p.u];
    ++degree[p.v];
  }
  FlowNetwork net(nodes_, source_, sink_, degree);
  for (const Pair& p : pairs_) net.add_pair(p.u, p.v, p.cap_uv, p.cap_vu);
  return net;
}

std::vector<std::uint8_t> source_reachable(const FlowNetwork& net) {
  std::vector<std::uint8_t> seen(net.nodes(), 0);
  std::vector<NodeId> queue{net.source()};
  seen[net.source()] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const NodeId u = queue[i];
    for (ArcId a = net.first_arc(u); a < net.last_arc(u); ++a) {
      const NodeId v = net.head(a);
      if (!seen[v] && net.residual(a) > 0) {
        seen[v] = 1;
        queue.push_back(v);
      }
    }
  }
  return seen;
}

std::vector<std::uint8_t> sink_reaching(const FlowNetwork& net) {
  std::vector<std::uint8_t> seen(net.nodes(), 0);
  std::vector<NodeId> queue{net.sink()};
  seen[net.sink()] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const NodeId v = queue[i];
    for (ArcId a = net.first_arc(v); a < net.last_arc(v); ++a) {
      const NodeId u = net.head(a);
      if (!seen[u] && net.residual(net.reverse(a)) > 0) {
        seen[u] = 1;
        queue.push_back(u);
      }
    }
  }
  return seen;
}

Cost cut_capacity(const FlowNetwork& net, std::span<const std::uint8_t> source_side) {
  Cost total = 0;
  for (NodeId u = 0; u < net.nodes(); ++u) {
    if (!source_side[u]) continue;
    for (ArcId a = net.first_arc(u); a < net.last_arc(u); ++a) {
      if (!source_side[net.head(a)]) total = saturating_add(total, net.capacity(a));
    }
  }
  return total;
}

void write_graph_dump(const FlowNetwork& net, std::ostream& out) {
  out << "nodes " << net.nodes() << " source " << net.source() << " sink " << net.sink()
      << " arcs " << net.positive_arcs() << '\n';
  for (NodeId u = 0; u < net.nodes(); ++u) {
    for (ArcId a = net.first_arc(u); a < net.last_arc(u); ++a) {
      if (net.capacity(a) > 0) out << u << ' ' << net.head(a) << ' ' << net.capacity(a) << '\n';
    }
  }
}

}  // namespace gazecut
