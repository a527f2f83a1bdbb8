#include "tricent/centrality.hpp"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "test_graphs.hpp"
#include "tricent/errors.hpp"
#include "tricent/oracles.hpp"

namespace tricent {
namespace {

using testing::complete;
using testing::cycle;
using testing::from_pairs;
using testing::karate;
using testing::path;
using testing::star;

// Literal evaluation through the induced subgraph G_i, independent of the
// counting shortcuts in tr_terms.
double tr_by_subgraph(const Graph& g, NodeId i) {
  auto members = triangle_neighbors(g, i).members;
  const auto s = static_cast<long long>(members.size());
  const auto nt = static_cast<long long>(triangles_at(g, i));
  members.push_back(i);
  const Graph sub = induced_subgraph(g, members);
  long long sum = 0;
  for (NodeId j : sub.nodes()) sum += static_cast<long long>(sub.degree(j));
  return 0.01 * static_cast<double>(3 * s - (2 * (s + 1) + nt) + sum);
}

TEST(MeasureTag, NamesRoundTrip) {
  for (MeasureTag tag : kAllMeasures) EXPECT_EQ(parse_measure(to_string(tag)), tag);
  EXPECT_EQ(parse_measure("cnc"), MeasureTag::kCNC);
  EXPECT_EQ(parse_measure("Tc"), MeasureTag::kTC);
  EXPECT_EQ(parse_measure("katz"), std::nullopt);
}

TEST(ScoreVectorTest, RejectsNonFiniteAndMismatchedInput) {
  EXPECT_THROW(ScoreVector(MeasureTag::kDC, {NodeId{1}}, {NAN}), std::invalid_argument);
  EXPECT_THROW(ScoreVector(MeasureTag::kDC, {NodeId{1}}, {}), std::invalid_argument);
  const ScoreVector v(MeasureTag::kDC, {NodeId{4}}, {2.0});
  EXPECT_EQ(v.at(NodeId{4}), 2.0);
  EXPECT_THROW(v.at(NodeId{5}), LookupError);
}

TEST(Sdeg, Examples) {
  EXPECT_EQ(sdeg(complete(3), NodeId{2}), 2u);
  EXPECT_EQ(sdeg(star(4), NodeId{1}), 0u);
  EXPECT_EQ(sdeg(complete(4), NodeId{3}), 3u);
  EXPECT_THROW(sdeg(complete(3), NodeId{7}), LookupError);
}

TEST(Sdeg, NeverExceedsDegree) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 1000; ++trial) {
    const Graph g = testing::random_graph(2 + trial % 63, 0.02 + 0.3 * (trial % 7) / 7.0, rng);
    for (NodeId id : g.nodes()) ASSERT_LE(sdeg(g, id), g.degree(id));
  }
}

TEST(Sdeg, ClosingANeighborPairNeverDecreasesIt) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = testing::random_graph(15, 0.25, rng);
    for (NodeId i : g.nodes()) {
      const auto nbrs = g.neighbors(i);
      for (std::size_t a = 0; a < nbrs.size(); ++a) {
        for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
          if (g.has_edge(nbrs[a], nbrs[b])) continue;
          auto edges = g.edges();
          edges.emplace_back(nbrs[a], nbrs[b]);
          const Graph closed = Graph::from_edge_list(edges, g.nodes());
          ASSERT_GE(sdeg(closed, i), sdeg(g, i));
        }
      }
    }
  }
}

TEST(TrCentrality, TriangleIsFiveHundredths) {
  const TrTerms t = tr_terms(complete(3), NodeId{1});
  EXPECT_EQ(t.sdeg, 2u);
  EXPECT_EQ(t.neighborhood, 3u);
  EXPECT_EQ(t.triangles, 1u);
  EXPECT_EQ(t.neighborhood_sum, 6u);
  EXPECT_EQ(t.gruebler(), 5);
  const auto scores = tr_centrality(complete(3));
  for (double s : scores.values()) EXPECT_NEAR(s, 0.05, 1e-12);
}

TEST(TrCentrality, TriangleFreeNodeIsMinusTwoHundredths) {
  EXPECT_NEAR(tr_centrality(path(3)).at(NodeId{2}), -0.02, 1e-12);
  EXPECT_NEAR(tr_centrality(Graph::from_edge_list({}, std::vector{NodeId{1}})).at(NodeId{1}),
              -0.02, 1e-12);
}

TEST(TrCentrality, K4IsOneTenth) {
  const TrTerms t = tr_terms(complete(4), NodeId{1});
  EXPECT_EQ(t.neighborhood_sum, 12u);
  for (double s : tr_centrality(complete(4)).values()) EXPECT_NEAR(s, 0.10, 1e-12);
}

TEST(TrCentrality, FanCenterIsNineHundredths) {
  // Hub with three triangle neighbors and two triangles (sdeg 3, NT 2).
  const Graph fan = from_pairs({{9, 1}, {9, 2}, {9, 3}, {1, 2}, {2, 3}, {3, 4}});
  const TrTerms t = tr_terms(fan, NodeId{9});
  EXPECT_EQ(t.sdeg, 3u);
  EXPECT_EQ(t.triangles, 2u);
  EXPECT_NEAR(tr_centrality(fan).at(NodeId{9}), 0.09, 1e-12);
}

TEST(TrCentrality, NineNodeCountsRankInExpectedOrder) {
  // (sdeg, triangles) per node 1..9 and the expected rank of each node.
  const std::pair<std::size_t, std::size_t> counts[] = {{2, 1}, {3, 2}, {6, 5}, {2, 1}, {1, 0},
                                                        {4, 3}, {4, 3}, {2, 1}, {3, 2}};
  const int expected_rank[] = {6, 4, 1, 7, 9, 2, 3, 8, 5};
  std::vector<NodeId> nodes;
  std::vector<double> scores;
  for (int i = 0; i < 9; ++i) {
    const auto [s, nt] = counts[i];
    const TrTerms t{s, s + 1, nt, 2 * (s + nt)};
    nodes.push_back(NodeId{i + 1});
    scores.push_back(kTrScale * static_cast<double>(t.gruebler()));
  }
  EXPECT_NEAR(scores[0], 0.05, 1e-12);
  EXPECT_NEAR(scores[8], 0.09, 1e-12);

  std::vector<int> order(9);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return scores[a] > scores[b]; });
  for (int r = 0; r < 9; ++r) EXPECT_EQ(expected_rank[order[r]], r + 1) << "node " << order[r] + 1;
}

TEST(TrCentrality, ExpandedAndClosedFormsAgree) {
  std::mt19937_64 rng(31);
  std::vector<Graph> graphs{complete(3), complete(4), complete(6), path(5), star(4), cycle(5),
                            karate()};
  for (int trial = 0; trial < 60; ++trial) graphs.push_back(testing::random_graph(25, 0.2, rng));

  for (const Graph& g : graphs) {
    const auto scores = tr_centrality(g);
    for (NodeId id : g.nodes()) {
      const TrTerms t = tr_terms(g, id);
      ASSERT_EQ(t.neighborhood, t.sdeg + 1);
      ASSERT_EQ(t.gruebler(), t.closed_form());
      ASSERT_EQ(t.gruebler(), static_cast<long long>(3 * t.sdeg + t.triangles) - 2);
      ASSERT_NEAR(scores.at(id), 0.01 * static_cast<double>(t.closed_form()), 1e-12);
      ASSERT_NEAR(scores.at(id), tr_by_subgraph(g, id), 1e-12);
    }
  }
}

TEST(TrCentrality, GlobalSdegConventionSumsNeighborSdeg) {
  const Graph g = karate();
  const auto all = sdeg_centrality(g);
  for (NodeId id : g.nodes()) {
    const TrTerms t = tr_terms(g, id, TrSumConvention::kGlobalSdeg);
    double sum = all.at(id);
    for (NodeId j : triangle_neighbors(g, id).members) sum += all.at(j);
    ASSERT_EQ(static_cast<double>(t.neighborhood_sum), sum);
    ASSERT_EQ(t.gruebler(), t.closed_form());
  }
  // On complete graphs both conventions coincide.
  EXPECT_NEAR(tr_centrality(complete(4), TrSumConvention::kGlobalSdeg).at(NodeId{1}), 0.10, 1e-12);
}

TEST(TrCentrality, KarateLeadersFollowTriangleCounts) {
  const auto scores = tr_centrality(karate());
  EXPECT_NEAR(scores.at(NodeId{1}), 0.58, 1e-12);  // sdeg 14, 18 triangles
  EXPECT_NEAR(scores.at(NodeId{34}), 0.55, 1e-12);  // sdeg 14, 15 triangles
}

TEST(TriangleCount, Examples) {
  EXPECT_EQ(triangle_count_centrality(complete(3)).at(NodeId{1}), 1.0);
  EXPECT_EQ(triangle_count_centrality(star(4)).at(NodeId{1}), 0.0);
}

TEST(Degree, Examples) {
  EXPECT_EQ(degree_centrality(complete(4)).at(NodeId{2}), 3.0);
  EXPECT_EQ(degree_centrality(from_pairs({{1, 2}, {3, 3}})).at(NodeId{3}), 0.0);
  EXPECT_EQ(degree_centrality(karate()).at(NodeId{34}), 17.0);
}

TEST(Betweenness, Examples) {
  const auto p = betweenness_centrality(path(3));
  EXPECT_DOUBLE_EQ(p.at(NodeId{2}), 1.0);
  EXPECT_DOUBLE_EQ(p.at(NodeId{1}), 0.0);
  for (double s : betweenness_centrality(complete(3)).values()) EXPECT_EQ(s, 0.0);

  const auto raw = betweenness_centrality(path(5), BetweennessScale::kRaw);
  EXPECT_DOUBLE_EQ(raw.at(NodeId{3}), 4.0);
  EXPECT_DOUBLE_EQ(raw.at(NodeId{2}), 3.0);

  const auto k = betweenness_centrality(karate());
  EXPECT_NEAR(k.at(NodeId{1}), 0.437635281385, 1e-11);
  EXPECT_NEAR(k.at(NodeId{34}), 0.304074975950, 1e-11);
}

TEST(Betweenness, MatchesPathEnumerationOracle) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const Graph g = testing::random_connected(n, 0.3, rng);
    const auto fast = betweenness_centrality(g);
    const auto slow = oracle::betweenness(g);
    for (NodeId id : g.nodes()) ASSERT_NEAR(fast.at(id), slow.at(id), 1e-9);
  }
}

TEST(Closeness, Examples) {
  for (double s : closeness_centrality(complete(3)).values()) EXPECT_DOUBLE_EQ(s, 1.0);
  const Graph two = Graph::from_edge_list({}, std::vector{NodeId{1}, NodeId{2}});
  for (double s : closeness_centrality(two).values()) EXPECT_EQ(s, 0.0);
  EXPECT_NEAR(closeness_centrality(karate()).at(NodeId{1}), 0.568965517241, 1e-11);

  // Components {1,2,3} and {4,5}: component-scaled values.
  const auto c = closeness_centrality(from_pairs({{1, 2}, {2, 3}, {4, 5}}));
  EXPECT_NEAR(c.at(NodeId{2}), 0.5, 1e-12);
  EXPECT_NEAR(c.at(NodeId{1}), 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(c.at(NodeId{4}), 0.25, 1e-12);
}

TEST(Eigenvector, Examples) {
  for (double s : eigenvector_centrality(complete(3)).values()) {
    EXPECT_NEAR(s, 1.0 / std::sqrt(3.0), 1e-12);
  }
  const auto p = eigenvector_centrality(path(3));
  EXPECT_GT(p.at(NodeId{2}), p.at(NodeId{1}));
  EXPECT_NEAR(p.at(NodeId{2}), 1.0 / std::sqrt(2.0), 1e-9);

  const auto k = eigenvector_centrality(karate());
  EXPECT_NEAR(k.at(NodeId{34}), 0.373363470291, 1e-9);
  EXPECT_NEAR(k.at(NodeId{1}), 0.355491444525, 1e-9);
}

TEST(Eigenvector, UnitNormNonnegativeAndSmallResidual) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = testing::random_connected(10 + trial, 0.3, rng);
    const auto ec = eigenvector_centrality(g, 1e-10, 100000);
    double norm = 0.0;
    for (double s : ec.values()) {
      ASSERT_GE(s, 0.0);
      norm += s * s;
    }
    ASSERT_NEAR(norm, 1.0, 1e-12);
    ASSERT_LT(eigen_residual(g, ec.values()), 1e-10);
  }
}

TEST(Eigenvector, IsolatedNodesScoreZero) {
  const auto ec = eigenvector_centrality(from_pairs({{1, 2}, {2, 3}, {1, 3}, {4, 4}}));
  EXPECT_EQ(ec.at(NodeId{4}), 0.0);
  for (double s : eigenvector_centrality(Graph::from_edge_list({}, std::vector{NodeId{1}, NodeId{2}}))
                      .values()) {
    EXPECT_EQ(s, 0.0);
  }
}

TEST(Eigenvector, ReportsNonConvergence) {
  try {
    eigenvector_centrality(karate(), 1e-12, 2);
    FAIL();
  } catch (const ConvergenceError& e) {
    EXPECT_EQ(e.iterations(), 2u);
    EXPECT_GT(e.residual(), 1e-12);
  }
}

TEST(PageRank, Examples) {
  for (double s : pagerank(cycle(4)).values()) EXPECT_NEAR(s, 0.25, 1e-12);
  const auto k = pagerank(karate());
  EXPECT_NEAR(k.at(NodeId{34}), 0.100919182323, 1e-9);
  EXPECT_NEAR(k.at(NodeId{1}), 0.096997285399, 1e-9);
}

TEST(PageRank, SumsToOneWithDanglingNodes) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = testing::random_graph(5 + trial, 0.05, rng);
    const auto pr = pagerank(g);
    const double total = std::accumulate(pr.values().begin(), pr.values().end(), 0.0);
    ASSERT_NEAR(total, 1.0, 1e-10);
  }
}

TEST(PageRank, RejectsBadParametersAndReportsNonConvergence) {
  EXPECT_THROW(pagerank(karate(), 1.0), std::invalid_argument);
  EXPECT_THROW(pagerank(karate(), 0.85, 0.0), std::invalid_argument);
  EXPECT_THROW(pagerank(karate(), 0.85, 1e-12, 3), ConvergenceError);
}

TEST(Compute, DispatchesEveryTag) {
  const Graph g = karate();
  EXPECT_EQ(compute(g, MeasureTag::kTC).values()[5], tr_centrality(g).values()[5]);
  const auto s = compute(g, MeasureTag::kSDEG);
  EXPECT_EQ(s.measure(), MeasureTag::kSDEG);
  for (NodeId id : g.nodes()) EXPECT_EQ(s.at(id), static_cast<double>(sdeg(g, id)));
  for (MeasureTag tag : kAllMeasures) {
    const auto v = compute(g, tag);
    EXPECT_EQ(v.measure(), tag);
    EXPECT_EQ(v.size(), g.node_count());
  }
}

TEST(Compute, VertexTransitiveGraphsScoreEqually) {
  for (const Graph& g : {complete(3), complete(5), complete(8), cycle(4), cycle(7), cycle(12)}) {
    for (MeasureTag tag : kAllMeasures) {
      const auto v = compute(g, tag);
      for (double s : v.values()) ASSERT_NEAR(s, v.values()[0], 1e-12) << to_string(tag);
    }
  }
}

TEST(Compute, InvariantUnderRelabeling) {
  std::mt19937_64 rng(71);
  const IterationParams params{0.85, 1e-12, 100000};
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = trial == 0 ? karate() : testing::random_connected(30, 0.15, rng);
    const auto perm = testing::random_relabeling(g, rng);
    const Graph h = testing::relabel(g, perm);
    for (MeasureTag tag : kAllMeasures) {
      const auto a = compute(g, tag, params);
      const auto b = compute(h, tag, params);
      const bool exact = tag == MeasureTag::kTC || tag == MeasureTag::kTR ||
                         tag == MeasureTag::kDC || tag == MeasureTag::kSDEG;
      for (NodeId id : g.nodes()) {
        if (exact) {
          ASSERT_EQ(a.at(id), b.at(perm(id))) << to_string(tag);
        } else {
          ASSERT_NEAR(a.at(id), b.at(perm(id)), 1e-9) << to_string(tag);
        }
      }
    }
  }
}

}  // namespace
}  // namespace tricent
