#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hallmatch/binding.hpp"
#include "hallmatch/graph.hpp"

namespace hallmatch {

/// Directed arc x -> f(x).
struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// The digraph on X ∪ f(X) with one arc x -> f(x) per x in X. Every X-vertex
/// has out-degree 1, every other node out-degree 0, and in-degrees are
/// bounded by the assignment's load limit k.
struct FunctionalDigraph {
  struct Component {
    VertexSet nodes;
    VertexSet x_members;
    std::vector<Arc> arcs;  // ordered by tail
  };

  std::size_t k = 0;
  VertexSet domain;  // X
  VertexSet nodes;   // X ∪ f(X)
  std::vector<Arc> arcs;
  /// Weakly connected components, ordered by smallest node.
  std::vector<Component> components;

  /// f(v) for v in X, nothing otherwise.
  [[nodiscard]] std::optional<Vertex> successor(Vertex v) const;
};

enum class ComponentKind { TreeDag, Unicyclic };

struct ComponentClass {
  ComponentKind kind = ComponentKind::TreeDag;
  /// Directed cycle in arc order, starting at its smallest node. Empty for
  /// TreeDag components.
  std::vector<Vertex> cycle_nodes;
  /// The cycle is a mutual pair x -> y -> x, i.e. a doubled edge once
  /// directions are dropped.
  bool is_parallel_pair = false;
};

/// Raised when a functional digraph breaks the single-cycle structure that
/// the matching bound relies on. Always an implementation bug.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The extraction could not start: X has a Hall violator for this k.
class ViolatorError : public std::runtime_error {
 public:
  ViolatorError(Violator violator, std::size_t k);
  [[nodiscard]] const Violator& violator() const { return violator_; }

 private:
  Violator violator_;
};

/// Throws std::invalid_argument if some f(x) is not adjacent to x in g, or
/// if a load exceeds f.k.
FunctionalDigraph build_functional_digraph(const Graph& g, const Assignment& f);

/// Classifies every component and checks the structure theorem: a component
/// is either acyclic with a single sink outside X, or has exactly one cycle,
/// that cycle is directed, and every other node drains into it. Violations
/// raise StructuralError.
std::vector<ComponentClass> classify_components(const FunctionalDigraph& h);

/// Maximum matching of a tree by leaf-greedy (match a leaf to its support,
/// delete both, repeat). Checks the guarantee size >= (n-1)/k.
/// Throws std::invalid_argument if `tree` is not a tree or max degree > k.
Matching tree_matching_lb(const Graph& tree, std::size_t k);

/// Connected graph with exactly one cycle. When `doubled_edge` is set,
/// `graph` is a tree and the cycle is that edge taken twice.
struct UnicyclicGraph {
  Graph graph;
  std::optional<Edge> doubled_edge;
};

/// Matching of size >= n/k (k >= 3, degrees counted with multiplicity <= k):
///  1. while some off-cycle vertex x has degree >= 2, take the deepest one
///     (all but one of its neighbours are leaves), match it to a leaf and
///     delete x together with its leaves;
///  2. if only the cycle is left, take alternate cycle edges;
///  3. otherwise match a cycle vertex z to a pendant leaf, delete z and its
///     leaves, and finish the remaining tree with tree_matching_lb.
Matching unicyclic_matching_lb(const UnicyclicGraph& u, std::size_t k);

struct Extraction {
  Matching matching;
  FunctionalDigraph digraph;
  std::vector<ComponentClass> classes;
  /// Matching edges contributed by each component.
  std::vector<std::size_t> component_sizes;
  /// ceil(|X| / (k+1)).
  std::size_t bound = 0;
};

/// Full pipeline for k >= 2: witness assignment, functional digraph,
/// component classification, per-component matching. The result is checked
/// against g and against the |X|/(k+1) guarantee. Throws ViolatorError when
/// bind(X) < 1/k, std::invalid_argument for k < 2.
Extraction extract(const Graph& g, const VertexSet& x, std::size_t k);

/// extract(g, x, k).matching
Matching extract_matching(const Graph& g, const VertexSet& x, std::size_t k);

}  // namespace hallmatch
