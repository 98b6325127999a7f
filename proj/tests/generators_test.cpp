#include "hallmatch/generators.hpp"

#include <gtest/gtest.h>

#include "hallmatch/corpus.hpp"
#include "hallmatch/detail/disjoint_sets.hpp"
#include "hallmatch/matching.hpp"

namespace hallmatch {
namespace {

bool acyclic(const Graph& g) {
  detail::DisjointSets sets(g.num_vertices());
  for (const Edge& e : g.edges()) {
    if (!sets.unite(e.u, e.v)) return false;
  }
  return true;
}

TEST(StarTest, Shape) {
  const auto s = star(3);
  EXPECT_EQ(s.graph.num_vertices(), 4u);
  EXPECT_EQ(s.graph.num_edges(), 3u);
  EXPECT_EQ(s.graph.degree(0), 3u);
  EXPECT_EQ(star(1).graph, Graph(2, {{0, 1}}));
  EXPECT_EQ(brute_force_matching(star(5).graph).size(), 1u);
  EXPECT_THROW(star(0), std::invalid_argument);
}

TEST(SimpleFamiliesTest, Shapes) {
  EXPECT_EQ(brute_force_matching(cycle(5).graph).size(), 2u);
  // grid(2,2) is C_4 with vertices 0-1-3-2.
  EXPECT_EQ(grid(2, 2).graph, Graph(4, {{0, 1}, {1, 3}, {3, 2}, {2, 0}}));
  EXPECT_EQ(brute_force_matching(path(4).graph).size(), 2u);
  EXPECT_THROW(cycle(2), std::invalid_argument);
  EXPECT_THROW(path(0), std::invalid_argument);
  EXPECT_THROW(grid(0, 3), std::invalid_argument);
}

TEST(GridTest, EdgeCountFormula) {
  for (std::size_t r = 1; r <= 6; ++r) {
    for (std::size_t c = 1; c <= 6; ++c) {
      EXPECT_EQ(grid(r, c).graph.num_edges(), r * (c - 1) + c * (r - 1));
    }
  }
}

TEST(GridTest, CentreIsTheOnlyDegreeFourVertexOf3x3) {
  const Graph g = grid(3, 3).graph;
  for (Vertex v = 0; v < 9; ++v) EXPECT_EQ(g.degree(v) == 4, v == 4);
}

TEST(TriangulationTest, SmallCases) {
  EXPECT_EQ(planar_triangulation(4, 99).graph, Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    EXPECT_EQ(planar_triangulation(10, seed).graph.num_edges(), 24u);
  }
  EXPECT_THROW(planar_triangulation(2, 0), std::invalid_argument);
}

TEST(TriangulationTest, MinimumDegreeThree) {
  EXPECT_GE(planar_triangulation(50, 7).graph.min_degree(), 3u);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = planar_triangulation(4 + seed * 5, seed).graph;
    EXPECT_GE(g.min_degree(), 3u);
    EXPECT_EQ(g.num_edges(), 3 * g.num_vertices() - 6);
  }
}

TEST(PlanarSubgraphTest, ExtremesAndEulerBound) {
  EXPECT_EQ(planar_subgraph(30, 1.0, 4).graph, planar_triangulation(30, 4).graph);
  EXPECT_EQ(planar_subgraph(30, 0.0, 4).graph.num_edges(), 0u);
  const auto g = planar_subgraph(30, 0.6, 1).graph;
  EXPECT_EQ(g.num_edges(), 51u);  // frozen from the reference run
  EXPECT_LE(g.num_edges(), 3u * 30 - 6);
  EXPECT_THROW(planar_subgraph(30, 1.5, 1), std::invalid_argument);
  EXPECT_THROW(planar_subgraph(30, -0.1, 1), std::invalid_argument);
}

TEST(ForestUnionTest, ArboricityCertificates) {
  EXPECT_TRUE(acyclic(forest_union(30, 1, 29, 3).graph));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_LE(forest_union(20, 2, 19, seed).graph.num_edges(), 2u * 19);
    const auto g = forest_union(40, 3, 39, seed);
    EXPECT_LE(g.graph.num_edges(), 3u * 40);
    EXPECT_EQ(g.certificate.arboricity_upper, 3u);
  }
  EXPECT_THROW(forest_union(10, 0, 5, 0), std::invalid_argument);
}

TEST(RandomSmallTest, ExtremesAndLimit) {
  EXPECT_EQ(random_small(7, 0.0, 1).graph.num_edges(), 0u);
  EXPECT_EQ(random_small(7, 1.0, 1).graph.num_edges(), 21u);
  EXPECT_THROW(random_small(17, 0.5, 0), std::invalid_argument);
}

TEST(RandomSmallTest, FrozenEdgeSet) {
  // Reference output of random_small(8, 0.4, 3); pins the portable PRNG.
  const std::vector<Edge> expected{{0, 2}, {0, 4}, {0, 6}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {2, 6},
                                   {3, 6}, {3, 7}, {4, 5}, {4, 6}, {5, 6}, {5, 7}, {6, 7}};
  EXPECT_EQ(random_small(8, 0.4, 3).graph.edges(), expected);
  EXPECT_EQ(random_small(8, 0.4, 3).graph, random_small(8, 0.4, 3).graph);
}

TEST(NetGraphTest, Shape) {
  const Graph g = net_graph().graph;
  EXPECT_EQ(g.num_vertices(), 6u);
  EXPECT_EQ(g.num_edges(), 6u);
  EXPECT_EQ(g.max_degree(), 3u);
  EXPECT_EQ(brute_force_matching(g).size(), 3u);
}

TEST(BoundedTreeTest, DegreeBoundAndShape) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t k = 2 + seed % 4;
    const Graph t = random_bounded_tree(1 + seed % 30, k, seed);
    EXPECT_TRUE(is_tree(t));
    EXPECT_LE(t.max_degree(), k);
    const Graph u = random_bounded_unicyclic(3 + seed % 30, std::max<std::size_t>(k, 3), seed);
    EXPECT_EQ(u.num_edges(), u.num_vertices());
    EXPECT_EQ(connected_components(u).size(), 1u);
    EXPECT_LE(u.max_degree(), std::max<std::size_t>(k, 3));
  }
}

TEST(CertificateTest, EveryCorpusGraphPassesItsTripwires) {
  const CorpusOptions opts{.seeds = 20, .base_seed = 5, .max_n = 80};
  static constexpr std::size_t kAlphas[] = {1, 2, 3, 4};
  for (const auto& g : planar_corpus(opts)) EXPECT_NO_THROW(check_certificate(g));
  for (const auto& g : forest_corpus(opts, kAlphas)) EXPECT_NO_THROW(check_certificate(g));
  for (const auto& g : fixture_corpus()) EXPECT_NO_THROW(check_certificate(g));
}

TEST(CertificateTest, BipartitePlanarFixturesMeetTwoNMinusFour) {
  for (const auto& g : fixture_corpus()) {
    if (!g.certificate.bipartite || g.graph.num_vertices() < 3) continue;
    EXPECT_LE(g.graph.num_edges(), 2 * g.graph.num_vertices() - 4);
  }
}

TEST(CertificateTest, TripwireCatchesAFalseClaim) {
  // K_6 has m = 15 > 3*6-6 = 12.
  GeneratedGraph fake{random_small(6, 1.0, 0).graph, Family::RandomSmall, {.planar = true}, 0};
  EXPECT_THROW(check_certificate(fake), std::logic_error);
}

TEST(FamilyNamesTest, RoundTrip) {
  for (const char* name : {"star", "path", "cycle", "grid", "tri", "tri-sub", "forest-union", "random-small", "net"}) {
    const auto f = parse_family(name);
    ASSERT_TRUE(f.has_value());
    EXPECT_EQ(family_name(*f), name);
  }
  EXPECT_FALSE(parse_family("petersen").has_value());
}

}  // namespace
}  // namespace hallmatch
