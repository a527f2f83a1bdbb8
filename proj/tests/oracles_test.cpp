#include "tricent/oracles.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_graphs.hpp"
#include "tricent/errors.hpp"

namespace tricent {
namespace {

using testing::complete;
using testing::cycle;
using testing::path;

TEST(TriangleOracle, SmallGraphs) {
  for (const auto& [id, count] : oracle::triangles(complete(4))) EXPECT_EQ(count, 3u) << id;
  for (const auto& [id, count] : oracle::triangles(cycle(5))) EXPECT_EQ(count, 0u) << id;
}

TEST(TriangleOracle, KarateTotalsAreThreeTimesTriangleCount) {
  std::size_t sum = 0;
  for (const auto& [id, count] : oracle::triangles(testing::karate())) sum += count;
  EXPECT_EQ(sum, 3u * 45u);
}

TEST(TriangleOracle, RefusesLargeGraphs) {
  EXPECT_NO_THROW(oracle::triangles(path(200)));
  EXPECT_THROW(oracle::triangles(path(201)), RefusalError);
}

TEST(BetweennessOracle, SmallGraphs) {
  EXPECT_DOUBLE_EQ(oracle::betweenness(path(3)).at(NodeId{2}), 1.0);
  const auto c4 = oracle::betweenness(cycle(4));
  for (double s : c4.values()) EXPECT_DOUBLE_EQ(s, c4.values()[0]);
  // Each node is one of two midpoints for its opposite pair: 0.5 raw, 1/6 normalized.
  EXPECT_DOUBLE_EQ(c4.values()[0], 0.5 * 2.0 / 6.0);
}

TEST(BetweennessOracle, MatchesBrandesOnRandomConnectedGraphs) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = testing::random_connected(3 + trial % 6, 0.35, rng);
    const auto slow = oracle::betweenness(g);
    const auto fast = betweenness_centrality(g);
    for (NodeId id : g.nodes()) ASSERT_NEAR(slow.at(id), fast.at(id), 1e-9);
  }
}

TEST(BetweennessOracle, GuardsSizeAndConnectivity) {
  EXPECT_THROW(oracle::betweenness(path(9)), RefusalError);
  EXPECT_THROW(oracle::betweenness(testing::from_pairs({{1, 2}, {3, 4}})), RefusalError);
}

}  // namespace
}  // namespace tricent
