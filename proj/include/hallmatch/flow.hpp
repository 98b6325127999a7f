#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hallmatch {

using FlowNode = std::size_t;
using Capacity = std::int64_t;

struct FlowArc {
  FlowNode tail = 0;
  FlowNode head = 0;
  Capacity capacity = 0;
};

/// Directed network with integer capacities and a designated source/sink.
struct FlowNetwork {
  std::size_t num_nodes = 0;
  FlowNode source = 0;
  FlowNode sink = 0;
  std::vector<FlowArc> arcs;

  /// Appends an arc and returns its index.
  std::size_t add_arc(FlowNode tail, FlowNode head, Capacity capacity) {
    arcs.push_back({tail, head, capacity});
    return arcs.size() - 1;
  }
};

struct FlowResult {
  Capacity value = 0;
  /// Flow on each arc, indexed like FlowNetwork::arcs.
  std::vector<Capacity> arc_flows;
  /// Nodes reachable from the source in the final residual network. This is
  /// the minimum cut closest to the source.
  std::vector<bool> source_side;
};

/// Integral maximum flow by Dinic's blocking-flow algorithm. Deterministic
/// for a fixed arc order. Throws std::invalid_argument for a malformed
/// network (source == sink, node out of range, negative capacity).
FlowResult max_flow(const FlowNetwork& net);

/// Total capacity of arcs leaving `source_side`.
Capacity cut_capacity(const FlowNetwork& net, const std::vector<bool>& source_side);

}  // namespace hallmatch
