#include "hallmatch/flow.hpp"

#include <gtest/gtest.h>

#include "hallmatch/rng.hpp"
#include "oracles.hpp"

namespace hallmatch {
namespace {

FlowNetwork random_network(std::uint64_t seed) {
  Rng rng(seed);
  FlowNetwork net;
  net.num_nodes = 2 + rng.below(9);  // 2..10 nodes
  net.source = 0;
  net.sink = net.num_nodes - 1;
  const std::size_t arcs = rng.below(3 * net.num_nodes);
  for (std::size_t i = 0; i < arcs; ++i) {
    const FlowNode u = rng.below(net.num_nodes);
    const FlowNode v = rng.below(net.num_nodes);
    if (u != v) net.add_arc(u, v, static_cast<Capacity>(rng.below(6)));
  }
  return net;
}

void expect_feasible(const FlowNetwork& net, const FlowResult& r) {
  std::vector<Capacity> balance(net.num_nodes, 0);
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    EXPECT_GE(r.arc_flows[i], 0);
    EXPECT_LE(r.arc_flows[i], net.arcs[i].capacity);
    balance[net.arcs[i].tail] -= r.arc_flows[i];
    balance[net.arcs[i].head] += r.arc_flows[i];
  }
  for (FlowNode v = 0; v < net.num_nodes; ++v) {
    if (v == net.source) {
      EXPECT_EQ(balance[v], -r.value);
    } else if (v == net.sink) {
      EXPECT_EQ(balance[v], r.value);
    } else {
      EXPECT_EQ(balance[v], 0) << "conservation at node " << v;
    }
  }
  EXPECT_TRUE(r.source_side[net.source]);
  EXPECT_FALSE(r.source_side[net.sink]);
  EXPECT_EQ(cut_capacity(net, r.source_side), r.value);
}

TEST(MaxFlowTest, SingleArc) {
  FlowNetwork net{.num_nodes = 2, .source = 0, .sink = 1};
  net.add_arc(0, 1, 5);
  const auto r = max_flow(net);
  EXPECT_EQ(r.value, 5);
  expect_feasible(net, r);
}

TEST(MaxFlowTest, TwoDisjointPaths) {
  FlowNetwork net{.num_nodes = 4, .source = 0, .sink = 3};
  net.add_arc(0, 1, 1);
  net.add_arc(0, 2, 1);
  net.add_arc(1, 3, 1);
  net.add_arc(2, 3, 1);
  EXPECT_EQ(max_flow(net).value, 2);
}

TEST(MaxFlowTest, ThreeArcBottleneck) {
  // Source side {s,a,b}, sink side {c,d,t}; the crossing arcs carry 2+3+4.
  FlowNetwork net{.num_nodes = 6, .source = 0, .sink = 5};
  net.add_arc(0, 1, 10);
  net.add_arc(0, 2, 10);
  net.add_arc(1, 2, 5);
  net.add_arc(1, 3, 2);
  net.add_arc(2, 3, 3);
  net.add_arc(2, 4, 4);
  net.add_arc(3, 4, 1);
  net.add_arc(3, 5, 10);
  net.add_arc(4, 5, 10);
  const auto r = max_flow(net);
  EXPECT_EQ(testing::exhaustive_min_cut(net), 9);
  EXPECT_EQ(r.value, 9);
  expect_feasible(net, r);
  EXPECT_EQ(r.source_side, (std::vector<bool>{true, true, true, false, false, false}));
}

TEST(MaxFlowTest, RejectsMalformedNetworks) {
  FlowNetwork same{.num_nodes = 2, .source = 1, .sink = 1};
  EXPECT_THROW(max_flow(same), std::invalid_argument);
  FlowNetwork negative{.num_nodes = 2, .source = 0, .sink = 1};
  negative.add_arc(0, 1, -1);
  EXPECT_THROW(max_flow(negative), std::invalid_argument);
  FlowNetwork out_of_range{.num_nodes = 2, .source = 0, .sink = 1};
  out_of_range.add_arc(0, 4, 1);
  EXPECT_THROW(max_flow(out_of_range), std::invalid_argument);
}

TEST(MaxFlowTest, MatchesExhaustiveMinCutOnRandomNetworks) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const FlowNetwork net = random_network(seed);
    const auto r = max_flow(net);
    EXPECT_EQ(r.value, testing::exhaustive_min_cut(net)) << "seed " << seed;
    expect_feasible(net, r);
  }
}

TEST(MaxFlowTest, DeterministicForFixedArcOrder) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const FlowNetwork net = random_network(seed);
    EXPECT_EQ(max_flow(net).arc_flows, max_flow(net).arc_flows);
  }
}

}  // namespace
}  // namespace hallmatch
