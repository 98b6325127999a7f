#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "hallmatch/graph.hpp"
#include "hallmatch/io.hpp"

namespace hallmatch {

enum class Family { Star, Path, Cycle, Grid, Triangulation, PlanarSubgraph, ForestUnion, RandomSmall, Net };

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

/// Structural guarantees a generator makes by construction.
struct Certificate {
  bool planar = false;
  bool bipartite = false;
  std::optional<std::size_t> arboricity_upper;
  std::optional<std::size_t> min_degree;
};

struct GeneratedGraph {
  Graph graph;
  Family family = Family::Star;
  Certificate certificate;
  std::uint64_t seed = 0;
};

/// Necessary conditions implied by a certificate: Euler bounds for planar
/// (m <= 3n-6) and bipartite planar (m <= 2n-4) graphs, m <= alpha*n for
/// bounded arboricity, and the declared minimum degree. Throws
/// std::logic_error naming the first failed condition.
void check_certificate(const GeneratedGraph& g);

/// '#'-comment header lines for the edge-list format.
Metadata certificate_metadata(const GeneratedGraph& g);

GeneratedGraph star(std::size_t k);
GeneratedGraph path(std::size_t n);
GeneratedGraph cycle(std::size_t n);
GeneratedGraph grid(std::size_t rows, std::size_t cols);

/// Maximal planar graph: start from a triangle, then repeatedly put a new
/// vertex inside a uniformly chosen face and join it to the face's corners.
GeneratedGraph planar_triangulation(std::size_t n, std::uint64_t seed);

/// planar_triangulation(n, seed) keeping each edge with probability p.
GeneratedGraph planar_subgraph(std::size_t n, double p, std::uint64_t seed);

/// Union of `alpha` random forests, each grown by inserting uniformly random
/// vertex pairs and rejecting those that would close a cycle.
/// `edges_per_forest` is capped at n-1.
GeneratedGraph forest_union(std::size_t n, std::size_t alpha, std::size_t edges_per_forest,
                            std::uint64_t seed);

/// G(n, p) for n <= 16.
GeneratedGraph random_small(std::size_t n, double p, std::uint64_t seed);

/// Triangle with one pendant vertex on each corner.
GeneratedGraph net_graph();

/// Random tree on n vertices with maximum degree <= max_degree (>= 2): each
/// new vertex attaches to a uniformly chosen earlier vertex with spare degree.
Graph random_bounded_tree(std::size_t n, std::size_t max_degree, std::uint64_t seed);

/// random_bounded_tree plus one extra edge between two non-adjacent vertices
/// with spare degree, giving a connected graph with exactly one cycle.
/// Requires n >= 3 and max_degree >= 3.
Graph random_bounded_unicyclic(std::size_t n, std::size_t max_degree, std::uint64_t seed);

}  // namespace hallmatch
