#include "hallmatch/binding.hpp"

#include <gtest/gtest.h>

#include "hallmatch/generators.hpp"
#include "oracles.hpp"

namespace hallmatch {
namespace {

using testing::naive_binding;
using testing::subset_from_mask;

VertexSet all_of(const Graph& g) { return VertexSet::range(g.num_vertices()); }

TEST(BindingTest, StarHasReciprocalBinding) {
  const Graph g = star(3).graph;
  const auto r = binding_number_of_set(g, all_of(g));
  ASSERT_FALSE(r.unbounded());
  EXPECT_EQ(*r.value, Rational(1, 3));
  EXPECT_EQ(r.argmin, VertexSet({1, 2, 3}));
}

TEST(BindingTest, SmallCompleteGraphs) {
  const Graph k2(2, {{0, 1}});
  EXPECT_EQ(*woodall_binding(k2).value, Rational(1, 1));
  const Graph k3 = cycle(3).graph;
  EXPECT_EQ(*woodall_binding(k3).value, Rational(2, 1));
  const auto single = binding_number_of_set(k3, VertexSet({0}));
  EXPECT_EQ(*single.value, Rational(2, 1));
  EXPECT_EQ(single.argmin, VertexSet({0}));
}

TEST(BindingTest, OddCyclesAgreeWithEnumeration) {
  // Any four vertices of C_5 dominate it, and {0,2,4} reaches {0,1,3,4}.
  const Graph c5 = cycle(5).graph;
  const auto r = woodall_binding(c5);
  const auto naive = naive_binding(c5, all_of(c5).members());
  ASSERT_TRUE(naive.bounded);
  EXPECT_EQ(*r.value, Rational(static_cast<std::int64_t>(naive.cover),
                               static_cast<std::int64_t>(naive.size)));
  EXPECT_EQ(*r.value, Rational(4, 3));
  EXPECT_EQ(r.argmin, VertexSet({0, 1, 3}));
  EXPECT_EQ(*woodall_binding(cycle(6).graph).value, Rational(1, 1));
}

TEST(BindingTest, SingletonsAreAlwaysAdmissible) {
  // x is never its own neighbour, so N({x}) != V and the value is bounded.
  const Graph k1(1, std::initializer_list<Edge>{});
  const auto r = binding_number_of_set(k1, VertexSet({0}));
  EXPECT_FALSE(r.unbounded());
  EXPECT_EQ(*r.value, Rational(0, 1));
  const Graph k2(2, {{0, 1}});
  const auto both = binding_number_of_set(k2, VertexSet({0, 1}));
  EXPECT_EQ(*both.value, Rational(1, 1));
  EXPECT_EQ(both.argmin, VertexSet({0}));
}

TEST(BindingTest, ArgminTieBreak) {
  // path 0-1-2: S={0} and S={2} both give 1/1, S={0,2} gives 1/2.
  const Graph p = path(3).graph;
  const auto r = binding_number_of_set(p, VertexSet({0, 2}));
  EXPECT_EQ(*r.value, Rational(1, 2));
  EXPECT_EQ(r.argmin, VertexSet({0, 2}));
  const auto ends = binding_number_of_set(p, VertexSet({0, 1, 2}));
  EXPECT_EQ(*ends.value, Rational(1, 2));
  // Among size-1 ties the smallest vertex wins.
  const auto c4 = binding_number_of_set(cycle(4).graph, VertexSet({0, 1, 2, 3}));
  EXPECT_EQ(*c4.value, Rational(1, 1));
  EXPECT_EQ(c4.argmin, VertexSet({0, 2}));
}

TEST(BindingTest, AgreesWithNaiveEnumeration) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Graph g = random_small(2 + seed % 8, 0.4, seed).graph;
    const std::size_t n = g.num_vertices();
    for (std::uint32_t mask = 1; mask < (1u << n); mask += 1 + mask / 3) {
      const auto x = subset_from_mask(mask, n);
      const auto r = binding_number_of_set(g, VertexSet(x));
      const auto naive = naive_binding(g, x);
      ASSERT_EQ(r.unbounded(), !naive.bounded) << "seed " << seed << " mask " << mask;
      if (naive.bounded) {
        EXPECT_EQ(*r.value, Rational(static_cast<std::int64_t>(naive.cover),
                                     static_cast<std::int64_t>(naive.size)));
        EXPECT_NE(neighborhood(g, r.argmin).size(), n);
        EXPECT_EQ(Rational(static_cast<std::int64_t>(neighborhood(g, r.argmin).size()),
                           static_cast<std::int64_t>(r.argmin.size())),
                  *r.value);
        EXPECT_TRUE(r.argmin.is_subset_of(VertexSet(x)));
      }
    }
  }
}

TEST(BindingTest, RejectsBadInput) {
  const Graph g = path(3).graph;
  EXPECT_THROW(binding_number_of_set(g, VertexSet()), std::invalid_argument);
  EXPECT_THROW(binding_number_of_set(g, VertexSet({0, 7})), std::invalid_argument);
  const Graph big = path(kBindingMaxSetSize + 1).graph;
  EXPECT_THROW(woodall_binding(big), std::invalid_argument);
  EXPECT_THROW(witness_assignment(g, VertexSet({0}), 0), std::invalid_argument);
  EXPECT_THROW(witness_assignment(g, VertexSet(), 1), std::invalid_argument);
}

TEST(WitnessAssignmentTest, StarLeavesFitWithLoadThree) {
  const Graph g = star(3).graph;
  const auto w = witness_assignment(g, VertexSet({1, 2, 3}), 3);
  ASSERT_TRUE(std::holds_alternative<Assignment>(w));
  const auto& a = std::get<Assignment>(w);
  EXPECT_EQ(a.target, (std::vector<Vertex>{0, 0, 0}));
  EXPECT_EQ(a.loads.at(0), 3u);
  EXPECT_NO_THROW(check_assignment(g, a));
}

TEST(WitnessAssignmentTest, StarLeavesOverflowWithLoadTwo) {
  const Graph g = star(3).graph;
  const auto w = witness_assignment(g, VertexSet({1, 2, 3}), 2);
  ASSERT_TRUE(std::holds_alternative<Violator>(w));
  EXPECT_EQ(std::get<Violator>(w).set, VertexSet({1, 2, 3}));
  EXPECT_NO_THROW(check_violator(g, std::get<Violator>(w), 2));
}

TEST(WitnessAssignmentTest, PathEndsShareTheMiddle) {
  const Graph g = path(3).graph;
  const auto w = witness_assignment(g, VertexSet({0, 2}), 2);
  ASSERT_TRUE(std::holds_alternative<Assignment>(w));
  const auto& a = std::get<Assignment>(w);
  EXPECT_EQ(a(0), 1u);
  EXPECT_EQ(a(2), 1u);
}

TEST(WitnessAssignmentTest, IsolatedVertexIsAViolator) {
  const Graph g(3, {{0, 1}});
  const auto w = witness_assignment(g, VertexSet({0, 2}), 5);
  ASSERT_TRUE(std::holds_alternative<Violator>(w));
  EXPECT_EQ(std::get<Violator>(w).set, VertexSet({2}));
}

TEST(WitnessAssignmentTest, CheckersRejectBadCertificates) {
  const Graph g = star(3).graph;
  Assignment bad{.domain = VertexSet({1, 2}), .target = {2, 0}, .loads = {{2, 1}, {0, 1}}, .k = 1};
  EXPECT_THROW(check_assignment(g, bad), std::logic_error);
  EXPECT_THROW(check_violator(g, Violator{VertexSet({1})}, 1), std::logic_error);
  // N({0,1}) = V.
  EXPECT_THROW(check_violator(g, Violator{VertexSet({0, 1})}, 1), std::logic_error);
}

TEST(WitnessAssignmentTest, DichotomyOnEverySmallGraph) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const Graph g = random_small(2 + seed % 7, 0.45, seed).graph;
    const std::size_t n = g.num_vertices();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      const auto x = subset_from_mask(mask, n);
      const auto bind = binding_number_of_set(g, VertexSet(x));
      for (std::size_t k = 1; k <= 3; ++k) {
        const auto w = witness_assignment(g, VertexSet(x), k);
        const bool fits = bind.at_least(Rational(1, static_cast<std::int64_t>(k)));
        ASSERT_EQ(std::holds_alternative<Assignment>(w), fits)
            << "seed " << seed << " mask " << mask << " k " << k;
        ASSERT_EQ(fits, testing::naive_binding_at_least_inverse(g, x, k));
        if (fits) {
          EXPECT_NO_THROW(check_assignment(g, std::get<Assignment>(w)));
        } else {
          const auto& s = std::get<Violator>(w).set;
          EXPECT_TRUE(s.is_subset_of(VertexSet(x)));
          const auto nbrs = neighborhood(g, s);
          EXPECT_LT(k * nbrs.size(), s.size());
          EXPECT_NE(nbrs.size(), n);
        }
      }
    }
  }
}

}  // namespace
}  // namespace hallmatch
