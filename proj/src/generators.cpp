#include "hallmatch/generators.hpp"

#include <array>
#include <stdexcept>
#include <vector>

#include "hallmatch/detail/disjoint_sets.hpp"
#include "hallmatch/rng.hpp"

namespace hallmatch {
namespace {

constexpr std::array<std::pair<Family, std::string_view>, 9> kFamilyNames{{
    {Family::Star, "star"},
    {Family::Path, "path"},
    {Family::Cycle, "cycle"},
    {Family::Grid, "grid"},
    {Family::Triangulation, "tri"},
    {Family::PlanarSubgraph, "tri-sub"},
    {Family::ForestUnion, "forest-union"},
    {Family::RandomSmall, "random-small"},
    {Family::Net, "net"},
}};

GeneratedGraph finish(Graph g, Family family, Certificate cert, std::uint64_t seed) {
  GeneratedGraph out{std::move(g), family, cert, seed};
  check_certificate(out);
  return out;
}

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability must lie in [0, 1]");
}

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [family, name] : kFamilyNames) {
    if (family == f) return name;
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [family, text] : kFamilyNames) {
    if (text == name) return family;
  }
  return std::nullopt;
}

void check_certificate(const GeneratedGraph& gen) {
  const std::size_t n = gen.graph.num_vertices();
  const std::size_t m = gen.graph.num_edges();
  const auto& cert = gen.certificate;
  const std::string tag(family_name(gen.family));
  if (cert.planar && n >= 3 && m > 3 * n - 6) {
    throw std::logic_error(tag + ": planar certificate violates m <= 3n-6");
  }
  if (cert.planar && cert.bipartite && n >= 3 && m > 2 * n - 4) {
    throw std::logic_error(tag + ": bipartite planar certificate violates m <= 2n-4");
  }
  if (cert.arboricity_upper && m > *cert.arboricity_upper * n) {
    throw std::logic_error(tag + ": arboricity certificate violates m <= alpha*n");
  }
  if (cert.min_degree && n > 0 && gen.graph.min_degree() < *cert.min_degree) {
    throw std::logic_error(tag + ": minimum degree below certificate");
  }
}

Metadata certificate_metadata(const GeneratedGraph& gen) {
  Metadata meta;
  meta.emplace_back("family", std::string(family_name(gen.family)));
  meta.emplace_back("seed", std::to_string(gen.seed));
  meta.emplace_back("planar", gen.certificate.planar ? "true" : "false");
  meta.emplace_back("arboricity_upper", gen.certificate.arboricity_upper
                                            ? std::to_string(*gen.certificate.arboricity_upper)
                                            : "none");
  if (gen.certificate.min_degree) {
    meta.emplace_back("min_degree", std::to_string(*gen.certificate.min_degree));
  }
  return meta;
}

GeneratedGraph star(std::size_t k) {
  if (k == 0) throw std::invalid_argument("star: k must be >= 1");
  std::vector<Edge> edges;
  for (std::size_t leaf = 1; leaf <= k; ++leaf) edges.emplace_back(0, static_cast<Vertex>(leaf));
  return finish(Graph(k + 1, edges), Family::Star,
                {.planar = true, .bipartite = true, .arboricity_upper = 1, .min_degree = 1}, 0);
}

GeneratedGraph path(std::size_t n) {
  if (n == 0) throw std::invalid_argument("path: n must be >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  }
  return finish(Graph(n, edges), Family::Path,
                {.planar = true, .bipartite = true, .arboricity_upper = 1, .min_degree = std::nullopt},
                0);
}

GeneratedGraph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle: n must be >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  }
  return finish(Graph(n, edges), Family::Cycle,
                {.planar = true, .bipartite = n % 2 == 0, .arboricity_upper = 2, .min_degree = 2}, 0);
}

GeneratedGraph grid(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("grid: dimensions must be >= 1");
  const auto id = [cols](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * cols + c); };
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  return finish(Graph(rows * cols, edges), Family::Grid,
                {.planar = true, .bipartite = true, .arboricity_upper = 2, .min_degree = std::nullopt},
                0);
}

GeneratedGraph planar_triangulation(std::size_t n, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("planar_triangulation: n must be >= 3");
  Rng rng(seed);
  std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
  // Inner and outer face of the starting triangle.
  std::vector<std::array<Vertex, 3>> faces{{0, 1, 2}, {0, 1, 2}};
  for (std::size_t i = 3; i < n; ++i) {
    const auto v = static_cast<Vertex>(i);
    const std::size_t pick = rng.below(faces.size());
    const auto [a, b, c] = faces[pick];
    edges.emplace_back(a, v);
    edges.emplace_back(b, v);
    edges.emplace_back(c, v);
    faces[pick] = {a, b, v};
    faces.push_back({b, c, v});
    faces.push_back({a, c, v});
  }
  Certificate cert{.planar = true, .bipartite = false, .arboricity_upper = 3,
                   .min_degree = n >= 4 ? std::optional<std::size_t>(3) : std::optional<std::size_t>(2)};
  return finish(Graph(n, edges), Family::Triangulation, cert, seed);
}

GeneratedGraph planar_subgraph(std::size_t n, double p, std::uint64_t seed) {
  check_probability(p);
  const GeneratedGraph base = planar_triangulation(n, seed);
  Rng rng(mix_seed(seed, 1));
  std::vector<Edge> kept;
  for (const Edge& e : base.graph.edges()) {
    if (rng.bernoulli(p)) kept.push_back(e);
  }
  return finish(Graph(n, kept), Family::PlanarSubgraph,
                {.planar = true, .bipartite = false, .arboricity_upper = 3, .min_degree = std::nullopt},
                seed);
}

GeneratedGraph forest_union(std::size_t n, std::size_t alpha, std::size_t edges_per_forest,
                            std::uint64_t seed) {
  if (alpha == 0) throw std::invalid_argument("forest_union: alpha must be >= 1");
  if (n == 0) throw std::invalid_argument("forest_union: n must be >= 1");
  const std::size_t target = std::min(edges_per_forest, n - 1);
  Rng rng(seed);
  std::vector<Edge> edges;
  for (std::size_t f = 0; f < alpha; ++f) {
    detail::DisjointSets sets(n);
    std::size_t added = 0;
    while (added < target) {
      const auto u = static_cast<Vertex>(rng.below(n));
      const auto v = static_cast<Vertex>(rng.below(n));
      if (u == v || !sets.unite(u, v)) continue;
      edges.emplace_back(u, v);
      ++added;
    }
  }
  Certificate cert{.planar = alpha == 1, .bipartite = alpha == 1, .arboricity_upper = alpha,
                   .min_degree = std::nullopt};
  return finish(Graph::from_edges_merged(n, std::move(edges)), Family::ForestUnion, cert, seed);
}

GeneratedGraph random_small(std::size_t n, double p, std::uint64_t seed) {
  if (n > 16) throw std::invalid_argument("random_small: n must be <= 16");
  check_probability(p);
  Rng rng(seed);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  return finish(Graph(n, edges), Family::RandomSmall, {}, seed);
}

GeneratedGraph net_graph() {
  return finish(Graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}}), Family::Net,
                {.planar = true, .bipartite = false, .arboricity_upper = 2, .min_degree = 1}, 0);
}

Graph random_bounded_tree(std::size_t n, std::size_t max_degree, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("random_bounded_tree: n must be >= 1");
  if ((n > 2 && max_degree < 2) || (n == 2 && max_degree < 1)) {
    throw std::invalid_argument("random_bounded_tree: max_degree too small for a tree on n vertices");
  }
  Rng rng(seed);
  std::vector<std::size_t> deg(n, 0);
  std::vector<Vertex> open{0};  // earlier vertices with spare degree
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t slot = rng.below(open.size());
    const Vertex parent = open[slot];
    edges.emplace_back(parent, static_cast<Vertex>(i));
    if (++deg[parent] == max_degree) {
      open[slot] = open.back();
      open.pop_back();
    }
    deg[i] = 1;
    if (deg[i] < max_degree) open.push_back(static_cast<Vertex>(i));
  }
  return Graph(n, edges);
}

Graph random_bounded_unicyclic(std::size_t n, std::size_t max_degree, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("random_bounded_unicyclic: n must be >= 3");
  if (max_degree < 3) throw std::invalid_argument("random_bounded_unicyclic: max_degree must be >= 3");
  const Graph tree = random_bounded_tree(n, max_degree, seed);
  std::vector<Edge> candidates;
  for (Vertex u = 0; u < n; ++u) {
    if (tree.degree(u) >= max_degree) continue;
    for (Vertex v = u + 1; v < n; ++v) {
      if (tree.degree(v) < max_degree && !tree.has_edge(u, v)) candidates.emplace_back(u, v);
    }
  }
  // Two leaves always qualify once n >= 3.
  Rng rng(mix_seed(seed, 2));
  std::vector<Edge> edges = tree.edges();
  edges.push_back(candidates[rng.below(candidates.size())]);
  return Graph(n, edges);
}

}  // namespace hallmatch
