#include "hallmatch/binding.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "hallmatch/flow.hpp"

namespace hallmatch {
namespace {

void check_members(const Graph& g, const VertexSet& x) {
  for (Vertex v : x) {
    if (v >= g.num_vertices()) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " not in graph");
    }
  }
}

// Same-size masks: the one owning the lowest differing bit has the
// lexicographically smaller member list.
bool lexicographically_before(std::uint32_t a, std::uint32_t b) {
  const std::uint32_t diff = a ^ b;
  return diff != 0 && (a & (diff & -diff)) != 0;
}

}  // namespace

BindingResult binding_number_of_set(const Graph& g, const VertexSet& x) {
  if (x.empty()) throw std::invalid_argument("binding number: X must be nonempty");
  if (x.size() > kBindingMaxSetSize) {
    throw std::invalid_argument("binding number: |X| = " + std::to_string(x.size()) +
                                " exceeds the enumeration limit of " +
                                std::to_string(kBindingMaxSetSize));
  }
  check_members(g, x);

  const std::size_t n = g.num_vertices();
  const auto& members = x.members();
  const std::uint32_t full = (std::uint32_t{1} << members.size()) - 1;

  // Gray-code walk: each step toggles one member of S and keeps, for every
  // vertex, the number of S-members adjacent to it.
  std::vector<std::uint32_t> hits(n, 0);
  std::size_t covered = 0;  // |N(S)|
  std::uint32_t subset = 0;

  bool found = false;
  std::size_t best_cov = 0;
  std::size_t best_size = 0;
  std::uint32_t best_mask = 0;

  for (std::uint32_t step = 1; step <= full; ++step) {
    const int bit = std::countr_zero(step);
    const std::uint32_t flag = std::uint32_t{1} << bit;
    subset ^= flag;
    const bool adding = (subset & flag) != 0;
    for (Vertex v : g.neighbors(members[bit])) {
      if (adding) {
        if (hits[v]++ == 0) ++covered;
      } else {
        if (--hits[v] == 0) --covered;
      }
    }
    if (covered == n) continue;

    const std::size_t size = static_cast<std::size_t>(std::popcount(subset));
    bool better = !found;
    if (found) {
      const std::size_t lhs = covered * best_size;
      const std::size_t rhs = best_cov * size;
      if (lhs != rhs) {
        better = lhs < rhs;
      } else if (size != best_size) {
        better = size < best_size;
      } else {
        better = lexicographically_before(subset, best_mask);
      }
    }
    if (better) {
      found = true;
      best_cov = covered;
      best_size = size;
      best_mask = subset;
    }
  }

  BindingResult result;
  if (!found) return result;
  result.value = Rational(static_cast<std::int64_t>(best_cov), static_cast<std::int64_t>(best_size));
  std::vector<Vertex> argmin;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (best_mask & (std::uint32_t{1} << i)) argmin.push_back(members[i]);
  }
  result.argmin = VertexSet(std::move(argmin));
  return result;
}

BindingResult woodall_binding(const Graph& g) {
  return binding_number_of_set(g, VertexSet::range(g.num_vertices()));
}

Vertex Assignment::operator()(Vertex x) const {
  const auto& ids = domain.members();
  const auto it = std::lower_bound(ids.begin(), ids.end(), x);
  if (it == ids.end() || *it != x) {
    throw std::out_of_range("vertex " + std::to_string(x) + " is not in the assignment domain");
  }
  return target[static_cast<std::size_t>(it - ids.begin())];
}

void check_assignment(const Graph& g, const Assignment& a) {
  if (a.target.size() != a.domain.size()) throw std::logic_error("assignment: size mismatch");
  std::map<Vertex, std::size_t> counted;
  for (std::size_t i = 0; i < a.target.size(); ++i) {
    const Vertex x = a.domain.members()[i];
    if (!g.has_edge(x, a.target[i])) {
      throw std::logic_error("assignment maps " + std::to_string(x) + " to non-neighbour " +
                             std::to_string(a.target[i]));
    }
    ++counted[a.target[i]];
  }
  if (counted != a.loads) throw std::logic_error("assignment: stale load table");
  for (const auto& [y, load] : counted) {
    if (load > a.k) {
      throw std::logic_error("assignment: load " + std::to_string(load) + " on " +
                             std::to_string(y) + " exceeds k=" + std::to_string(a.k));
    }
  }
}

void check_violator(const Graph& g, const Violator& v, std::size_t k) {
  const VertexSet nbrs = neighborhood(g, v.set);
  if (v.set.empty()) throw std::logic_error("violator: empty set");
  if (nbrs.size() == g.num_vertices()) throw std::logic_error("violator: N(S) = V");
  if (k * nbrs.size() >= v.set.size()) {
    throw std::logic_error("violator: k|N(S)| >= |S| for S = " + to_string(v.set));
  }
}

std::variant<Assignment, Violator> witness_assignment(const Graph& g, const VertexSet& x,
                                                      std::size_t k) {
  if (k < 1) throw std::invalid_argument("witness_assignment: k must be >= 1");
  if (x.empty()) throw std::invalid_argument("witness_assignment: X must be nonempty");
  check_members(g, x);

  for (Vertex v : x) {
    if (g.degree(v) == 0) return Violator{VertexSet{v}};
  }

  // Nodes: 0 = source, 1 = sink, then X in order, then N(X) in order.
  const VertexSet targets = neighborhood(g, x);
  const auto& xs = x.members();
  const auto& ys = targets.members();
  const std::size_t x_base = 2;
  const std::size_t y_base = x_base + xs.size();

  FlowNetwork net;
  net.num_nodes = y_base + ys.size();
  net.source = 0;
  net.sink = 1;
  const auto unbounded = static_cast<Capacity>(xs.size() + 1);

  struct Candidate {
    std::size_t arc;
    std::size_t x_index;
    Vertex y;
  };
  std::vector<Candidate> candidates;
  for (std::size_t i = 0; i < xs.size(); ++i) net.add_arc(net.source, x_base + i, 1);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (Vertex y : g.neighbors(xs[i])) {
      const auto j = static_cast<std::size_t>(std::lower_bound(ys.begin(), ys.end(), y) - ys.begin());
      candidates.push_back({net.add_arc(x_base + i, y_base + j, unbounded), i, y});
    }
  }
  for (std::size_t j = 0; j < ys.size(); ++j) {
    net.add_arc(y_base + j, net.sink, static_cast<Capacity>(k));
  }

  const FlowResult flow = max_flow(net);

  if (flow.value == static_cast<Capacity>(xs.size())) {
    Assignment a;
    a.domain = x;
    a.k = k;
    a.target.assign(xs.size(), 0);
    for (const Candidate& c : candidates) {
      if (flow.arc_flows[c.arc] > 0) {
        a.target[c.x_index] = c.y;
        ++a.loads[c.y];
      }
    }
    return a;
  }

  std::vector<Vertex> side;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (flow.source_side[x_base + i]) side.push_back(xs[i]);
  }
  return Violator{VertexSet(std::move(side))};
}

}  // namespace hallmatch
