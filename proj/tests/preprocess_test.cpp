#include "kdc/preprocess.hpp"

#include "gtest/gtest.h"
#include "kdc/verify.hpp"
#include "test_support.hpp"

namespace kdc {
namespace {

using testing::complete_graph;
using testing::twelve_vertex;
using testing::seven_vertex;
using testing::random_graph;
using testing::vid;
using testing::vids;

TEST(DegenTest, SevenVertexSmallestIdOrder) {
  Graph g = seven_vertex();
  // With smallest-id tie-breaking the ordering is v1..v7, whose longest
  // 1-defective suffix is {v5, v6, v7}.
  VertexSet s = degen(g, 1);
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(s, vids(g, {"v5", "v6", "v7"}));
}

TEST(DegenTest, SevenVertexPrintedOrder) {
  Graph g = seven_vertex();
  std::vector<int> order;
  for (const char* l : {"v1", "v2", "v5", "v3", "v4", "v6", "v7"}) order.push_back(vid(g, l));
  ASSERT_TRUE(testing::is_degeneracy_ordering(g, order));
  EXPECT_EQ(degen_suffix(g, 1, order), vids(g, {"v4", "v6", "v7"}));
}

TEST(DegenTest, SmallCases) {
  EXPECT_EQ(degen(complete_graph(5), 0).size(), 5u);
  EXPECT_TRUE(degen(testing::empty_graph(0), 2).empty());
  Graph g = twelve_vertex();
  EXPECT_EQ(degen(g, 0), vids(g, {"v8", "v9", "v10", "v11", "v12"}));
}

TEST(DegenOptTest, Examples) {
  Graph g6 = seven_vertex();
  EXPECT_EQ(degen_opt(g6, 1), vids(g6, {"v1", "v2", "v3", "v4"}));
  EXPECT_EQ(degen_opt(complete_graph(5), 2).size(), 5u);
  // The optimum for k = 2 is 6, but no higher-ranked neighborhood reaches
  // it: the best, {v1} plus N+(v1) = {v2, v3, v4, v6}, only ties the Degen
  // baseline {v8..v12}, which is kept.
  Graph g2 = twelve_vertex();
  EXPECT_EQ(degen(g2, 2).size(), 5u);
  EXPECT_EQ(degen_opt(g2, 2), vids(g2, {"v8", "v9", "v10", "v11", "v12"}));
}

TEST(DegenOptTest, DominatesDegenAndIsValid) {
  for (uint64_t seed = 0; seed < 150; ++seed) {
    Graph g = random_graph(5 + seed % 25, 0.15 + 0.05 * (seed % 14), 1000 + seed);
    for (int k : {0, 1, 2, 3, 5}) {
      VertexSet a = degen(g, k);
      VertexSet b = degen_opt(g, k);
      EXPECT_TRUE(is_k_defective(g, a, k));
      EXPECT_TRUE(is_k_defective(g, b, k));
      EXPECT_GE(b.size(), a.size());
    }
  }
}

TEST(GlobalReduceTest, TwelveVertex) {
  Graph g = twelve_vertex();
  ReducedGraph r = global_reduce(g, 5, 1);
  for (int v : r.to_original) EXPECT_NE(v, vid(g, "v7"));
  // No 1-defective clique of size 6 exists, and the result keeps that.
  if (r.graph.num_vertices() > 0) EXPECT_LE(brute_force_max(r.graph, 1).size(), 5u);
  for (auto [u, v] : r.graph.edge_list()) {
    EXPECT_TRUE(g.has_edge(r.to_original[u], r.to_original[v]));
  }
}

TEST(GlobalReduceTest, TrivialThresholds) {
  Graph g = twelve_vertex();
  ReducedGraph r = global_reduce(g, 0, 1);
  EXPECT_EQ(r.graph.num_vertices(), g.num_vertices());
  EXPECT_EQ(r.graph.num_edges(), g.num_edges());
  EXPECT_EQ(global_reduce(complete_graph(5), 5, 0).graph.num_vertices(), 0);
}

TEST(GlobalReduceTest, KeepsIsolatedVerticesWhenCoreStepIsSkipped) {
  // Two isolated vertices form a 1-defective clique of size 2.
  Graph g = testing::empty_graph(2);
  ReducedGraph r = global_reduce(g, 1, 1);
  EXPECT_EQ(r.graph.num_vertices(), 2);
}

TEST(GlobalReduceTest, SoundOnRandomGraphs) {
  for (uint64_t seed = 0; seed < 200; ++seed) {
    Graph g = random_graph(5 + seed % 14, 0.2 + 0.3 * (seed % 3), 5000 + seed);
    const int k = std::vector<int>{0, 1, 2, 3, 5}[seed % 5];
    const int opt = static_cast<int>(brute_force_max(g, k).size());
    for (bool truss : {false, true}) {
      ReducedGraph r = global_reduce(g, opt - 1, k, truss);
      VertexSet inner = brute_force_max(r.graph, k);
      EXPECT_EQ(static_cast<int>(inner.size()), opt) << seed;
      VertexSet mapped;
      for (int v : inner) mapped.push_back(r.to_original[v]);
      EXPECT_TRUE(is_k_defective(g, mapped, k));
    }
  }
}

TEST(GlobalReduceTest, ShrinksMonotonicallyInLb) {
  for (uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = random_graph(30, 0.3 + 0.1 * (seed % 4), 9000 + seed);
    int previous_n = g.num_vertices();
    int64_t previous_m = g.num_edges();
    for (int lb = 0; lb <= 12; ++lb) {
      ReducedGraph r = global_reduce(g, lb, 2);
      EXPECT_LE(r.graph.num_vertices(), previous_n);
      EXPECT_LE(r.graph.num_edges(), previous_m);
      previous_n = r.graph.num_vertices();
      previous_m = r.graph.num_edges();
    }
  }
}

}  // namespace
}  // namespace kdc
