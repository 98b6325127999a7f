#include "hallmatch/constructive.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "hallmatch/detail/disjoint_sets.hpp"

namespace hallmatch {
namespace {

std::size_t index_of(const VertexSet& set, Vertex v) {
  const auto& ids = set.members();
  return static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

// Local (0-based) copy of one component with the node list used to map back.
struct LocalComponent {
  std::vector<Vertex> global;
  std::vector<Edge> edges;
  std::optional<Edge> doubled;
};

LocalComponent localize(const FunctionalDigraph::Component& comp, const ComponentClass& cls) {
  LocalComponent local;
  local.global = comp.nodes.members();
  std::vector<Edge> edges;
  for (const Arc& arc : comp.arcs) {
    edges.emplace_back(static_cast<Vertex>(index_of(comp.nodes, arc.tail)),
                       static_cast<Vertex>(index_of(comp.nodes, arc.head)));
  }
  std::sort(edges.begin(), edges.end());
  if (cls.is_parallel_pair) {
    const auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup == edges.end()) throw StructuralError("parallel pair without a repeated edge");
    local.doubled = *dup;
    edges.erase(dup);
  }
  local.edges = std::move(edges);
  return local;
}

void check_bound(std::size_t size, std::size_t k, std::size_t need, const char* what) {
  // size >= need / k, kept in integers.
  if (size * k < need) {
    throw std::logic_error(std::string(what) + ": matching of size " + std::to_string(size) +
                           " is below the guaranteed " + std::to_string(need) + "/" +
                           std::to_string(k));
  }
}

}  // namespace

ViolatorError::ViolatorError(Violator violator, std::size_t k)
    : std::runtime_error("no assignment with load " + std::to_string(k) + ": violator " +
                         to_string(violator.set)),
      violator_(std::move(violator)) {}

std::optional<Vertex> FunctionalDigraph::successor(Vertex v) const {
  if (!domain.contains(v)) return std::nullopt;
  return arcs[index_of(domain, v)].head;
}

FunctionalDigraph build_functional_digraph(const Graph& g, const Assignment& f) {
  if (f.target.size() != f.domain.size()) {
    throw std::invalid_argument("assignment: domain and target sizes differ");
  }
  FunctionalDigraph h;
  h.k = f.k;
  h.domain = f.domain;

  std::map<Vertex, std::size_t> loads;
  std::vector<Vertex> nodes = f.domain.members();
  for (std::size_t i = 0; i < f.target.size(); ++i) {
    const Vertex x = f.domain.members()[i];
    const Vertex y = f.target[i];
    if (!g.has_edge(x, y)) {
      throw std::invalid_argument("assignment maps " + std::to_string(x) + " to non-neighbour " +
                                  std::to_string(y));
    }
    if (++loads[y] > f.k) {
      throw std::invalid_argument("assignment overloads " + std::to_string(y) + " beyond k=" +
                                  std::to_string(f.k));
    }
    h.arcs.push_back({x, y});
    nodes.push_back(y);
  }
  h.nodes = VertexSet(std::move(nodes));

  detail::DisjointSets sets(h.nodes.size());
  for (const Arc& arc : h.arcs) sets.unite(index_of(h.nodes, arc.tail), index_of(h.nodes, arc.head));

  std::map<std::size_t, std::size_t> slot;  // root -> component index
  std::vector<std::vector<Vertex>> node_groups;
  for (std::size_t i = 0; i < h.nodes.size(); ++i) {
    const auto [it, fresh] = slot.try_emplace(sets.find(i), node_groups.size());
    if (fresh) node_groups.emplace_back();
    node_groups[it->second].push_back(h.nodes.members()[i]);
  }
  h.components.resize(node_groups.size());
  std::vector<std::vector<Vertex>> x_groups(node_groups.size());
  for (const Arc& arc : h.arcs) {
    const std::size_t c = slot.at(sets.find(index_of(h.nodes, arc.tail)));
    h.components[c].arcs.push_back(arc);
    x_groups[c].push_back(arc.tail);
  }
  for (std::size_t c = 0; c < node_groups.size(); ++c) {
    h.components[c].nodes = VertexSet(std::move(node_groups[c]));
    h.components[c].x_members = VertexSet(std::move(x_groups[c]));
  }
  return h;
}

std::vector<ComponentClass> classify_components(const FunctionalDigraph& h) {
  constexpr std::size_t kSink = static_cast<std::size_t>(-1);
  std::vector<ComponentClass> out;
  out.reserve(h.components.size());
  for (const auto& comp : h.components) {
    const std::size_t n = comp.nodes.size();
    if (comp.arcs.size() != comp.x_members.size()) {
      throw StructuralError("component arc count differs from |X_i|");
    }

    std::vector<std::size_t> next(n, kSink);
    std::vector<std::size_t> in_degree(n, 0);
    for (const Arc& arc : comp.arcs) {
      const std::size_t tail = index_of(comp.nodes, arc.tail);
      const std::size_t head = index_of(comp.nodes, arc.head);
      if (next[tail] != kSink) throw StructuralError("node with two outgoing arcs");
      next[tail] = head;
      if (++in_degree[head] > h.k) throw StructuralError("in-degree exceeds the load bound");
    }

    // Walk from every node, colouring 0 = new, 1 = on the current walk,
    // 2 = finished. Meeting colour 1 closes a directed cycle.
    std::vector<char> colour(n, 0);
    std::vector<std::vector<std::size_t>> cycles;
    std::size_t sinks = 0;
    for (std::size_t start = 0; start < n; ++start) {
      std::vector<std::size_t> walk;
      std::size_t v = start;
      while (v != kSink && colour[v] == 0) {
        colour[v] = 1;
        walk.push_back(v);
        v = next[v];
      }
      if (v != kSink && colour[v] == 1) {
        const auto from = std::find(walk.begin(), walk.end(), v);
        cycles.emplace_back(from, walk.end());
      }
      for (std::size_t w : walk) {
        colour[w] = 2;
        if (next[w] == kSink) ++sinks;
      }
    }

    ComponentClass cls;
    if (cycles.empty()) {
      // Out-degree <= 1 and no cycle: every walk ends at the unique sink.
      if (sinks != 1 || comp.arcs.size() + 1 != n) {
        throw StructuralError("acyclic component must have exactly one sink");
      }
      if (comp.x_members.contains(comp.nodes.members()[static_cast<std::size_t>(
              std::find(next.begin(), next.end(), kSink) - next.begin())])) {
        throw StructuralError("sink of an acyclic component lies in X");
      }
      cls.kind = ComponentKind::TreeDag;
    } else {
      // A second cycle or a sink next to a cycle would mean some node has two
      // outgoing arcs in the undirected picture.
      if (cycles.size() != 1 || sinks != 0 || comp.arcs.size() != n) {
        throw StructuralError("component has " + std::to_string(cycles.size()) + " cycles and " +
                              std::to_string(sinks) + " sinks");
      }
      cls.kind = ComponentKind::Unicyclic;
      for (std::size_t i : cycles.front()) cls.cycle_nodes.push_back(comp.nodes.members()[i]);
      std::rotate(cls.cycle_nodes.begin(),
                  std::min_element(cls.cycle_nodes.begin(), cls.cycle_nodes.end()),
                  cls.cycle_nodes.end());
      cls.is_parallel_pair = cls.cycle_nodes.size() == 2;
    }
    out.push_back(std::move(cls));
  }
  return out;
}

Matching tree_matching_lb(const Graph& tree, std::size_t k) {
  if (!is_tree(tree)) throw std::invalid_argument("tree_matching_lb: input is not a tree");
  if (k == 0 || tree.max_degree() > k) {
    throw std::invalid_argument("tree_matching_lb: maximum degree exceeds k");
  }
  const std::size_t n = tree.num_vertices();

  // BFS order from vertex 0; scanning it backwards visits every vertex after
  // its subtree, so an unmatched vertex whose children are all matched is a
  // leaf of what remains.
  std::vector<Vertex> order{0};
  std::vector<Vertex> parent(n, 0);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Vertex w : tree.neighbors(order[head])) {
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = order[head];
        order.push_back(w);
      }
    }
  }

  std::vector<bool> matched(n, false);
  Matching m;
  for (std::size_t i = order.size(); i-- > 1;) {
    const Vertex v = order[i];
    if (!matched[v] && !matched[parent[v]]) {
      matched[v] = matched[parent[v]] = true;
      m.edges.emplace_back(v, parent[v]);
    }
  }
  std::sort(m.edges.begin(), m.edges.end());
  check_bound(m.size(), k, n - 1, "tree_matching_lb");
  return m;
}

Matching unicyclic_matching_lb(const UnicyclicGraph& u, std::size_t k) {
  const Graph& g = u.graph;
  const std::size_t n = g.num_vertices();
  if (k < 3) throw std::invalid_argument("unicyclic_matching_lb: k must be >= 3");
  if (n < 2 || connected_components(g).size() != 1) {
    throw std::invalid_argument("unicyclic_matching_lb: graph must be connected with n >= 2");
  }
  if (u.doubled_edge) {
    if (!g.has_edge(u.doubled_edge->u, u.doubled_edge->v) || g.num_edges() + 1 != n) {
      throw std::invalid_argument("unicyclic_matching_lb: doubled edge requires a tree containing it");
    }
  } else if (g.num_edges() != n) {
    throw std::invalid_argument("unicyclic_matching_lb: need exactly n edges for one cycle");
  }

  std::vector<std::size_t> deg(n);
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (u.doubled_edge && (v == u.doubled_edge->u || v == u.doubled_edge->v)) ++deg[v];
    if (deg[v] > k) throw std::invalid_argument("unicyclic_matching_lb: maximum degree exceeds k");
  }

  // The cycle is what survives repeated leaf removal.
  std::vector<bool> on_cycle(n, true);
  {
    std::vector<std::size_t> residual = deg;
    std::vector<Vertex> leaves;
    for (Vertex v = 0; v < n; ++v) {
      if (residual[v] == 1) leaves.push_back(v);
    }
    while (!leaves.empty()) {
      const Vertex v = leaves.back();
      leaves.pop_back();
      on_cycle[v] = false;
      for (Vertex w : g.neighbors(v)) {
        if (on_cycle[w] && --residual[w] == 1) leaves.push_back(w);
      }
    }
  }

  // Depth from the cycle; parent points one step toward it.
  std::vector<std::size_t> depth(n, 0);
  std::vector<Vertex> parent(n, 0);
  std::vector<Vertex> order;
  for (Vertex v = 0; v < n; ++v) {
    if (on_cycle[v]) order.push_back(v);
  }
  const std::size_t cycle_len = order.size();
  {
    std::vector<bool> seen(on_cycle);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const Vertex v = order[head];
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          depth[w] = depth[v] + 1;
          parent[w] = v;
          order.push_back(w);
        }
      }
    }
  }

  std::vector<bool> alive(n, true);
  std::vector<std::size_t> cur = deg;
  Matching m;
  const auto remove_with_leaves = [&](Vertex x, Vertex partner) {
    m.edges.emplace_back(x, partner);
    for (Vertex w : g.neighbors(x)) {
      if (!alive[w]) continue;
      if (cur[w] == 1) {
        alive[w] = false;
      } else {
        cur[w] -= (u.doubled_edge && Edge(x, w) == *u.doubled_edge) ? 2 : 1;
      }
    }
    alive[x] = false;
  };

  // Step 1: deepest-first, so when x is reached its surviving children are
  // all leaves and its parent is its only neighbour of degree >= 2.
  for (std::size_t i = order.size(); i-- > cycle_len;) {
    const Vertex x = order[i];
    if (!alive[x] || cur[x] < 2) continue;
    std::optional<Vertex> leaf;
    for (Vertex w : g.neighbors(x)) {
      if (!alive[w] || w == parent[x]) continue;
      if (cur[w] != 1) throw StructuralError("deepest branch vertex has a non-leaf child");
      if (!leaf) leaf = w;
    }
    if (!leaf) throw StructuralError("branch vertex without a leaf child");
    remove_with_leaves(x, *leaf);
  }

  // Step 2: only the cycle remains.
  bool pendant_left = false;
  for (Vertex v = 0; v < n; ++v) pendant_left |= alive[v] && !on_cycle[v];
  if (!pendant_left) {
    if (u.doubled_edge) {
      m.edges.push_back(*u.doubled_edge);
    } else {
      std::vector<Vertex> ring{order.front()};
      std::vector<bool> visited(n, false);
      visited[ring.front()] = true;
      while (ring.size() < cycle_len) {
        for (Vertex w : g.neighbors(ring.back())) {
          if (on_cycle[w] && !visited[w]) {
            visited[w] = true;
            ring.push_back(w);
            break;
          }
        }
      }
      for (std::size_t i = 0; i + 1 < ring.size(); i += 2) m.edges.emplace_back(ring[i], ring[i + 1]);
    }
  } else {
    // Step 3: a cycle vertex with a pendant leaf; what remains is a tree.
    std::optional<Vertex> z;
    std::optional<Vertex> leaf;
    for (Vertex v = 0; v < n && !z; ++v) {
      if (!on_cycle[v]) continue;
      for (Vertex w : g.neighbors(v)) {
        if (alive[w] && !on_cycle[w]) {
          z = v;
          leaf = w;
          break;
        }
      }
    }
    remove_with_leaves(*z, *leaf);
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v) {
      if (alive[v]) rest.push_back(v);
    }
    if (!rest.empty()) {
      const VertexSet rest_set(rest);
      const Matching tail = tree_matching_lb(g.induced(rest_set), k);
      for (const Edge& e : tail.edges) m.edges.emplace_back(rest[e.u], rest[e.v]);
    }
  }

  std::sort(m.edges.begin(), m.edges.end());
  if (!is_valid_matching(g, m)) throw StructuralError("unicyclic extraction produced an invalid matching");
  check_bound(m.size(), k, n, "unicyclic_matching_lb");
  return m;
}

Extraction extract(const Graph& g, const VertexSet& x, std::size_t k) {
  if (k == 1) {
    throw std::invalid_argument(
        "k = 1 is not supported: an odd cycle has binding number 1 yet no matching of size n/2");
  }
  if (k < 2) throw std::invalid_argument("extract: k must be >= 2");

  auto witness = witness_assignment(g, x, k);
  if (auto* violator = std::get_if<Violator>(&witness)) throw ViolatorError(*violator, k);

  Extraction out;
  out.digraph = build_functional_digraph(g, std::get<Assignment>(witness));
  out.classes = classify_components(out.digraph);
  out.bound = ceil_div(x.size(), k + 1);

  const std::size_t degree_bound = k + 1;
  std::size_t x_total = 0;
  for (std::size_t c = 0; c < out.digraph.components.size(); ++c) {
    const auto& comp = out.digraph.components[c];
    const auto& cls = out.classes[c];
    x_total += comp.x_members.size();
    LocalComponent local = localize(comp, cls);
    Graph piece(local.global.size(), local.edges);

    Matching part;
    if (cls.kind == ComponentKind::TreeDag) {
      part = tree_matching_lb(piece, degree_bound);
    } else {
      part = unicyclic_matching_lb({std::move(piece), local.doubled}, degree_bound);
    }
    check_bound(part.size(), degree_bound, comp.x_members.size(), "component");
    for (const Edge& e : part.edges) out.matching.edges.emplace_back(local.global[e.u], local.global[e.v]);
    out.component_sizes.push_back(part.size());
  }
  if (x_total != x.size()) throw StructuralError("components do not partition X");

  std::sort(out.matching.edges.begin(), out.matching.edges.end());
  if (!is_valid_matching(g, out.matching)) {
    throw StructuralError("extracted matching is not a matching of the input graph");
  }
  if (out.matching.size() < out.bound) throw StructuralError("extracted matching below ceil(|X|/(k+1))");
  return out;
}

Matching extract_matching(const Graph& g, const VertexSet& x, std::size_t k) {
  return extract(g, x, k).matching;
}

}  // namespace hallmatch
