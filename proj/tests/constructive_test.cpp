#include "hallmatch/constructive.hpp"

#include <gtest/gtest.h>

#include "hallmatch/generators.hpp"
#include "hallmatch/matching.hpp"
#include "hallmatch/rng.hpp"
#include "oracles.hpp"

namespace hallmatch {
namespace {

Assignment make_assignment(std::vector<Vertex> domain, std::vector<Vertex> target, std::size_t k) {
  Assignment a{.domain = VertexSet(std::move(domain)), .target = std::move(target), .loads = {}, .k = k};
  for (Vertex y : a.target) ++a.loads[y];
  return a;
}

TEST(FunctionalDigraphTest, StarLeavesDrainIntoTheCentre) {
  const Graph g = star(3).graph;
  const auto h = build_functional_digraph(g, make_assignment({1, 2, 3}, {0, 0, 0}, 3));
  EXPECT_EQ(h.nodes, VertexSet({0, 1, 2, 3}));
  ASSERT_EQ(h.components.size(), 1u);
  EXPECT_EQ(h.components[0].x_members, VertexSet({1, 2, 3}));
  EXPECT_EQ(h.successor(2), 0u);
  EXPECT_FALSE(h.successor(0).has_value());
  const auto cls = classify_components(h);
  ASSERT_EQ(cls.size(), 1u);
  EXPECT_EQ(cls[0].kind, ComponentKind::TreeDag);
  EXPECT_TRUE(cls[0].cycle_nodes.empty());
}

TEST(FunctionalDigraphTest, MutualPairIsAParallelCycle) {
  const Graph g(2, {{0, 1}});
  const auto h = build_functional_digraph(g, make_assignment({0, 1}, {1, 0}, 1));
  const auto cls = classify_components(h);
  ASSERT_EQ(cls.size(), 1u);
  EXPECT_EQ(cls[0].kind, ComponentKind::Unicyclic);
  EXPECT_TRUE(cls[0].is_parallel_pair);
  EXPECT_EQ(cls[0].cycle_nodes, (std::vector<Vertex>{0, 1}));
}

TEST(FunctionalDigraphTest, TriangleWithInTrees) {
  const Graph g = net_graph().graph;
  const auto h = build_functional_digraph(g, make_assignment({0, 1, 2, 3, 4, 5}, {2, 0, 1, 0, 1, 2}, 2));
  const auto cls = classify_components(h);
  ASSERT_EQ(cls.size(), 1u);
  EXPECT_EQ(cls[0].kind, ComponentKind::Unicyclic);
  EXPECT_FALSE(cls[0].is_parallel_pair);
  // 0 -> 2 -> 1 -> 0
  EXPECT_EQ(cls[0].cycle_nodes, (std::vector<Vertex>{0, 2, 1}));
}

TEST(FunctionalDigraphTest, SeparateComponentsOrderedBySmallestNode) {
  const Graph g(6, {{0, 1}, {2, 3}, {4, 5}});
  const auto h = build_functional_digraph(g, make_assignment({1, 2, 5}, {0, 3, 4}, 1));
  ASSERT_EQ(h.components.size(), 3u);
  EXPECT_EQ(h.components[0].nodes, VertexSet({0, 1}));
  EXPECT_EQ(h.components[1].nodes, VertexSet({2, 3}));
  EXPECT_EQ(h.components[2].nodes, VertexSet({4, 5}));
}

TEST(FunctionalDigraphTest, RejectsBadAssignments) {
  const Graph g = star(3).graph;
  EXPECT_THROW(build_functional_digraph(g, make_assignment({1, 2}, {0, 3}, 2)), std::invalid_argument);
  EXPECT_THROW(build_functional_digraph(g, make_assignment({1, 2, 3}, {0, 0, 0}, 2)),
               std::invalid_argument);
}

TEST(FunctionalDigraphTest, TamperedComponentIsAStructuralError) {
  const Graph g = star(3).graph;
  auto h = build_functional_digraph(g, make_assignment({1, 2, 3}, {0, 0, 0}, 3));
  h.components[0].arcs.pop_back();
  EXPECT_THROW(classify_components(h), StructuralError);
}

TEST(TreeMatchingTest, Fixtures) {
  EXPECT_EQ(tree_matching_lb(path(4).graph, 2).size(), 2u);
  EXPECT_EQ(tree_matching_lb(star(3).graph, 3).size(), 1u);
  EXPECT_EQ(tree_matching_lb(testing::double_star(), 3).size(), 2u);
  EXPECT_EQ(tree_matching_lb(Graph(1, std::initializer_list<Edge>{}), 1).size(), 0u);
}

TEST(TreeMatchingTest, RejectsNonTreesAndHighDegree) {
  EXPECT_THROW(tree_matching_lb(cycle(4).graph, 3), std::invalid_argument);
  EXPECT_THROW(tree_matching_lb(star(4).graph, 3), std::invalid_argument);
}

TEST(TreeMatchingTest, MaximumAndAboveTheGuarantee) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t k = 3 + seed % 3;
    const Graph t = random_bounded_tree(2 + seed % 20, k, seed);
    const Matching m = tree_matching_lb(t, k);
    EXPECT_TRUE(is_valid_matching(t, m));
    EXPECT_GE(m.size() * k, t.num_vertices() - 1);
    EXPECT_EQ(m.size(), brute_force_matching(t).size()) << "seed " << seed;
  }
}

TEST(UnicyclicMatchingTest, Fixtures) {
  EXPECT_EQ(unicyclic_matching_lb({cycle(3).graph, std::nullopt}, 3).size(), 1u);
  EXPECT_EQ(unicyclic_matching_lb({net_graph().graph, std::nullopt}, 3).size(), 3u);
  EXPECT_EQ(unicyclic_matching_lb({Graph(2, {{0, 1}}), Edge{0, 1}}, 3).size(), 1u);
  EXPECT_EQ(unicyclic_matching_lb({cycle(7).graph, std::nullopt}, 3).size(), 3u);
  // Doubled edge 0=1 with leaves 2 on 0 and 3 on 1.
  const Graph pendant(4, {{0, 1}, {0, 2}, {1, 3}});
  EXPECT_EQ(unicyclic_matching_lb({pendant, Edge{0, 1}}, 3).size(), 2u);
}

TEST(UnicyclicMatchingTest, RejectsBadInput) {
  EXPECT_THROW(unicyclic_matching_lb({cycle(3).graph, std::nullopt}, 2), std::invalid_argument);
  EXPECT_THROW(unicyclic_matching_lb({path(4).graph, std::nullopt}, 3), std::invalid_argument);
  EXPECT_THROW(unicyclic_matching_lb({path(3).graph, Edge{0, 2}}, 3), std::invalid_argument);
  // The doubled edge counts twice towards the degree of 1.
  const Graph heavy(5, {{0, 1}, {0, 2}, {1, 3}, {1, 4}});
  EXPECT_THROW(unicyclic_matching_lb({heavy, Edge{0, 1}}, 3), std::invalid_argument);
}

TEST(UnicyclicMatchingTest, AboveTheGuaranteeAndBelowNu) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t k = 3 + seed % 3;
    const Graph u = random_bounded_unicyclic(3 + seed % 25, k, seed);
    ASSERT_EQ(u.num_edges(), u.num_vertices());
    const Matching m = unicyclic_matching_lb({u, std::nullopt}, k);
    EXPECT_TRUE(is_valid_matching(u, m));
    EXPECT_GE(m.size() * k, u.num_vertices()) << "seed " << seed;
    EXPECT_LE(m.size(), max_matching(u).size());
  }
}

TEST(ExtractTest, StarIsTight) {
  for (std::size_t k = 2; k <= 8; ++k) {
    const Graph g = star(k).graph;
    const auto e = extract(g, VertexSet::range(k + 1), k);
    EXPECT_EQ(e.matching.size(), 1u);
    EXPECT_EQ(e.bound, 1u);
  }
}

TEST(ExtractTest, PathEnds) {
  const auto e = extract(path(3).graph, VertexSet({0, 2}), 2);
  EXPECT_GE(e.matching.size(), 1u);
  EXPECT_EQ(e.bound, 1u);
  EXPECT_EQ(e.component_sizes.size(), e.digraph.components.size());
}

TEST(ExtractTest, ViolatorAndUnsupportedK) {
  const Graph g = star(3).graph;
  try {
    extract(g, VertexSet({1, 2, 3}), 2);
    FAIL() << "expected ViolatorError";
  } catch (const ViolatorError& e) {
    EXPECT_EQ(e.violator().set, VertexSet({1, 2, 3}));
  }
  EXPECT_THROW(extract(cycle(5).graph, VertexSet::range(5), 1), std::invalid_argument);
  EXPECT_THROW(extract(cycle(5).graph, VertexSet::range(5), 0), std::invalid_argument);
}

TEST(ExtractTest, RandomTriplesMeetTheBound) {
  std::size_t ran = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    Rng rng(mix_seed(seed, 11));
    const std::size_t n = 2 + rng.below(9);
    const Graph g = random_small(n, 0.2 + 0.1 * static_cast<double>(seed % 6), seed).graph;
    const auto mask = static_cast<std::uint32_t>(1 + rng.below((std::size_t{1} << n) - 1));
    const VertexSet x(testing::subset_from_mask(mask, n));
    const std::size_t k = 2 + rng.below(3);
    if (!testing::naive_binding_at_least_inverse(g, x.members(), k)) {
      EXPECT_THROW(extract(g, x, k), ViolatorError);
      continue;
    }
    ++ran;
    const auto e = extract(g, x, k);
    EXPECT_TRUE(is_valid_matching(g, e.matching));
    EXPECT_GE(e.matching.size() * (k + 1), x.size());
    EXPECT_LE(e.matching.size(), max_matching(g).size());
  }
  EXPECT_GT(ran, 100u);
}

}  // namespace
}  // namespace hallmatch
