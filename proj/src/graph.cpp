#include "hallmatch/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hallmatch/detail/disjoint_sets.hpp"

namespace hallmatch {

VertexSet::VertexSet(std::initializer_list<Vertex> ids) : VertexSet(std::vector<Vertex>(ids)) {}

VertexSet::VertexSet(std::vector<Vertex> ids) : members_(std::move(ids)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::range(std::size_t n) {
  std::vector<Vertex> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<Vertex>(i);
  return VertexSet(std::move(ids));
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

std::string to_string(const VertexSet& set) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (Vertex v : set) {
    if (!first) out << ',';
    out << v;
    first = false;
  }
  out << '}';
  return out.str();
}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  ") out of range for n=" + std::to_string(n));
    }
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (std::size_t u = 0; u < n; ++u) {
    auto& list = adj_[u];
    std::sort(list.begin(), list.end());
    if (auto dup = std::adjacent_find(list.begin(), list.end()); dup != list.end()) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," +
                                  std::to_string(*dup) + ")");
    }
  }
  num_edges_ = edges.size();
}

Graph::Graph(std::size_t n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

Graph Graph::from_edges_merged(std::size_t n, std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(n, edges);
}

void Graph::check_vertex(Vertex u) const {
  if (u >= adj_.size()) {
    throw std::out_of_range("vertex " + std::to_string(u) + " out of range for n=" +
                            std::to_string(adj_.size()));
  }
}

std::span<const Vertex> Graph::neighbors(Vertex u) const {
  check_vertex(u);
  return adj_[u];
}

std::size_t Graph::degree(Vertex u) const {
  check_vertex(u);
  return adj_[u].size();
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= adj_.size() || v >= adj_.size()) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& list : adj_) best = std::max(best, list.size());
  return best;
}

std::size_t Graph::min_degree() const {
  if (adj_.empty()) return 0;
  std::size_t best = adj_.front().size();
  for (const auto& list : adj_) best = std::min(best, list.size());
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(static_cast<Vertex>(u), v);
    }
  }
  return out;
}

Graph Graph::induced(const VertexSet& keep) const {
  std::vector<Vertex> local(adj_.size(), static_cast<Vertex>(-1));
  Vertex next = 0;
  for (Vertex v : keep) {
    check_vertex(v);
    local[v] = next++;
  }
  std::vector<Edge> kept;
  for (Vertex u : keep) {
    for (Vertex v : adj_[u]) {
      if (u < v && local[v] != static_cast<Vertex>(-1)) kept.emplace_back(local[u], local[v]);
    }
  }
  return Graph(keep.size(), kept);
}

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
  const std::size_t n = g.num_vertices();
  std::vector<char> hit(n, 0);
  for (Vertex u : s) {
    for (Vertex v : g.neighbors(u)) hit[v] = 1;
  }
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < n; ++v) {
    if (hit[v]) out.push_back(static_cast<Vertex>(v));
  }
  return VertexSet(std::move(out));
}

std::size_t degree(const Graph& g, Vertex u) { return g.degree(u); }

std::vector<VertexSet> connected_components(const Graph& g) {
  const std::size_t n = g.num_vertices();
  detail::DisjointSets sets(n);
  for (const Edge& e : g.edges()) sets.unite(e.u, e.v);

  // Roots are visited in order of their smallest member since v ascends.
  std::vector<std::size_t> slot(n, n);
  std::vector<std::vector<Vertex>> groups;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t root = sets.find(v);
    if (slot[root] == n) {
      slot[root] = groups.size();
      groups.emplace_back();
    }
    groups[slot[root]].push_back(static_cast<Vertex>(v));
  }
  std::vector<VertexSet> out;
  out.reserve(groups.size());
  for (auto& members : groups) out.emplace_back(std::move(members));
  return out;
}

bool is_valid_matching(const Graph& g, const Matching& m) {
  std::vector<char> used(g.num_vertices(), 0);
  for (const Edge& e : m.edges) {
    if (!g.has_edge(e.u, e.v)) return false;
    if (used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = 1;
  }
  return true;
}

bool is_tree(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return false;
  return g.num_edges() == n - 1 && connected_components(g).size() == 1;
}

}  // namespace hallmatch
