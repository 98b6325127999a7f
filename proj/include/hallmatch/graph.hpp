#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hallmatch {

using Vertex = std::uint32_t;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids);
  explicit VertexSet(std::vector<Vertex> ids);

  /// All of 0..n-1.
  static VertexSet range(std::size_t n);

  [[nodiscard]] std::size_t size() const { return members_.size(); }
  [[nodiscard]] bool empty() const { return members_.empty(); }
  [[nodiscard]] bool contains(Vertex v) const;
  [[nodiscard]] const std::vector<Vertex>& members() const { return members_; }
  [[nodiscard]] auto begin() const { return members_.begin(); }
  [[nodiscard]] auto end() const { return members_.end(); }

  [[nodiscard]] bool is_subset_of(const VertexSet& other) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

std::string to_string(const VertexSet& set);

/// Set of vertex-disjoint edges. Validity against a host graph is checked by
/// is_valid_matching(), not on construction.
struct Matching {
  std::vector<Edge> edges;

  [[nodiscard]] std::size_t size() const { return edges.size(); }
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Throws std::invalid_argument on
  /// self-loops, duplicate edges or out-of-range endpoints.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges);

  /// Like the constructor, but silently merges duplicate edges.
  static Graph from_edges_merged(std::size_t n, std::vector<Edge> edges);

  [[nodiscard]] std::size_t num_vertices() const { return adj_.size(); }
  [[nodiscard]] std::size_t num_edges() const { return num_edges_; }

  [[nodiscard]] std::span<const Vertex> neighbors(Vertex u) const;
  [[nodiscard]] std::size_t degree(Vertex u) const;
  [[nodiscard]] bool has_edge(Vertex u, Vertex v) const;
  [[nodiscard]] std::size_t max_degree() const;
  [[nodiscard]] std::size_t min_degree() const;

  /// Edges in lexicographic order.
  [[nodiscard]] std::vector<Edge> edges() const;

  /// Subgraph induced on `keep`, relabelled to 0..|keep|-1 in ascending order.
  [[nodiscard]] Graph induced(const VertexSet& keep) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex u) const;

  std::vector<std::vector<Vertex>> adj_;
  std::size_t num_edges_ = 0;
};

/// N(S): every vertex with at least one neighbour in S. May intersect S.
VertexSet neighborhood(const Graph& g, const VertexSet& s);

std::size_t degree(const Graph& g, Vertex u);

/// Maximal connected vertex sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_valid_matching(const Graph& g, const Matching& m);

bool is_tree(const Graph& g);

}  // namespace hallmatch
