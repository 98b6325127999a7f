#include "hallmatch/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace hallmatch {
namespace {

// Residual graph: arc 2i is the forward copy of net.arcs[i], 2i+1 its reverse.
class Dinic {
 public:
  explicit Dinic(const FlowNetwork& net)
      : net_(net), out_(net.num_nodes), residual_(2 * net.arcs.size()), level_(net.num_nodes),
        cursor_(net.num_nodes) {
    for (std::size_t i = 0; i < net.arcs.size(); ++i) {
      const FlowArc& arc = net.arcs[i];
      residual_[2 * i] = arc.capacity;
      residual_[2 * i + 1] = 0;
      out_[arc.tail].push_back(2 * i);
      out_[arc.head].push_back(2 * i + 1);
    }
  }

  Capacity run() {
    Capacity total = 0;
    while (build_levels()) {
      std::fill(cursor_.begin(), cursor_.end(), 0);
      while (Capacity pushed = augment(net_.source, std::numeric_limits<Capacity>::max())) {
        total += pushed;
      }
    }
    return total;
  }

  std::vector<Capacity> arc_flows() const {
    std::vector<Capacity> flows(net_.arcs.size());
    for (std::size_t i = 0; i < flows.size(); ++i) flows[i] = residual_[2 * i + 1];
    return flows;
  }

  std::vector<bool> reachable_from_source() const {
    std::vector<bool> seen(net_.num_nodes, false);
    std::vector<FlowNode> stack{net_.source};
    seen[net_.source] = true;
    while (!stack.empty()) {
      const FlowNode u = stack.back();
      stack.pop_back();
      for (std::size_t r : out_[u]) {
        const FlowNode v = head(r);
        if (residual_[r] > 0 && !seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
      }
    }
    return seen;
  }

 private:
  FlowNode head(std::size_t r) const {
    const FlowArc& arc = net_.arcs[r / 2];
    return r % 2 == 0 ? arc.head : arc.tail;
  }

  bool build_levels() {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<FlowNode> queue;
    level_[net_.source] = 0;
    queue.push(net_.source);
    while (!queue.empty()) {
      const FlowNode u = queue.front();
      queue.pop();
      for (std::size_t r : out_[u]) {
        const FlowNode v = head(r);
        if (residual_[r] > 0 && level_[v] < 0) {
          level_[v] = level_[u] + 1;
          queue.push(v);
        }
      }
    }
    return level_[net_.sink] >= 0;
  }

  Capacity augment(FlowNode u, Capacity limit) {
    if (u == net_.sink) return limit;
    for (std::size_t& i = cursor_[u]; i < out_[u].size(); ++i) {
      const std::size_t r = out_[u][i];
      const FlowNode v = head(r);
      if (residual_[r] <= 0 || level_[v] != level_[u] + 1) continue;
      if (Capacity pushed = augment(v, std::min(limit, residual_[r]))) {
        residual_[r] -= pushed;
        residual_[r ^ 1] += pushed;
        return pushed;
      }
    }
    return 0;
  }

  const FlowNetwork& net_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<Capacity> residual_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

void validate(const FlowNetwork& net) {
  if (net.source >= net.num_nodes || net.sink >= net.num_nodes) {
    throw std::invalid_argument("flow network: source or sink out of range");
  }
  if (net.source == net.sink) throw std::invalid_argument("flow network: source equals sink");
  for (const FlowArc& arc : net.arcs) {
    if (arc.tail >= net.num_nodes || arc.head >= net.num_nodes) {
      throw std::invalid_argument("flow network: arc endpoint out of range");
    }
    if (arc.capacity < 0) throw std::invalid_argument("flow network: negative capacity");
  }
}

}  // namespace

FlowResult max_flow(const FlowNetwork& net) {
  validate(net);
  Dinic solver(net);
  FlowResult result;
  result.value = solver.run();
  result.arc_flows = solver.arc_flows();
  result.source_side = solver.reachable_from_source();
  return result;
}

Capacity cut_capacity(const FlowNetwork& net, const std::vector<bool>& source_side) {
  Capacity total = 0;
  for (const FlowArc& arc : net.arcs) {
    if (source_side[arc.tail] && !source_side[arc.head]) total += arc.capacity;
  }
  return total;
}

}  // namespace hallmatch
