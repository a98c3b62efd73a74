#include <cmath>

#include "gtest/gtest.h"
#include "kdc/verify.hpp"
#include "test_support.hpp"

namespace kdc {
namespace {

using testing::complete_graph;
using testing::twelve_vertex;
using testing::seven_vertex;
using testing::parse;
using testing::random_graph;
using testing::vids;

TEST(IsKDefectiveTest, Examples) {
  Graph g = twelve_vertex();
  auto left = vids(g, {"v1", "v2", "v3", "v4", "v5", "v6"});
  EXPECT_TRUE(is_k_defective(g, left, 2));
  EXPECT_FALSE(is_k_defective(g, left, 1));
  EXPECT_TRUE(is_k_defective(g, {}, 0));
  EXPECT_TRUE(is_k_defective(complete_graph(5), std::vector<int>{0, 1, 2, 3, 4}, 0));
}

TEST(BruteForceMaxTest, WorkedExamples) {
  EXPECT_EQ(brute_force_max(twelve_vertex(), 1).size(), 5u);
  EXPECT_EQ(brute_force_max(twelve_vertex(), 2).size(), 6u);
  EXPECT_EQ(brute_force_max(twelve_vertex(), 0), vids(twelve_vertex(), {"v8", "v9", "v10", "v11", "v12"}));
  EXPECT_EQ(brute_force_max(seven_vertex(), 1).size(), 4u);
  EXPECT_EQ(brute_force_max(parse("a b\nb c\n"), 1).size(), 3u);
  EXPECT_TRUE(brute_force_max(testing::empty_graph(0), 3).empty());
}

TEST(BruteForceMaxTest, BudgetErrors) {
  EXPECT_THROW(brute_force_max(testing::empty_graph(31), 0), OracleBudgetExceeded);
  OracleBudget tiny;
  tiny.max_nodes = 10;
  EXPECT_THROW(brute_force_max(complete_graph(8), 2, tiny), OracleBudgetExceeded);
}

TEST(BruteForceMaxTest, ExtendRespectsRequiredAndAllowed) {
  Graph g = twelve_vertex();
  auto required = vids(g, {"v7"});
  auto allowed = vids(g, {"v1", "v5", "v6", "v8"});
  auto r = brute_force_extend(g, 1, required, allowed);
  ASSERT_TRUE(r.feasible);
  // {v7, v5, v6, v1}: v1-v5 is the only missing edge.
  EXPECT_EQ(r.best, vids(g, {"v1", "v5", "v6", "v7"}));
  auto infeasible = brute_force_extend(g, 0, vids(g, {"v2", "v4"}), {});
  EXPECT_FALSE(infeasible.feasible);
}

TEST(BruteForceMaxTest, MonotoneSelfConsistentAndAboveCliqueNumber) {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = random_graph(6 + seed % 10, 0.3 + 0.1 * (seed % 5), 77 + seed);
    const size_t clique = brute_force_max_clique(g).size();
    EXPECT_EQ(brute_force_max(g, 0).size(), clique);
    size_t previous = 0;
    for (int k = 0; k <= 5; ++k) {
      VertexSet best = brute_force_max(g, k);
      EXPECT_TRUE(is_k_defective(g, best, k));
      EXPECT_GE(best.size(), previous);
      EXPECT_GE(best.size(), clique);
      previous = best.size();
    }
  }
}

TEST(GammaTest, PublishedConstantsAreUpwardRoundings) {
  // The published values are the roots rounded up to three decimals, which is
  // what the running-time proof needs. gamma_0 is the golden ratio 1.6180 and
  // gamma_1 the tribonacci constant 1.8393, so only k >= 2 lie within 5e-4.
  const double published[] = {1.619, 1.840, 1.928, 1.966, 1.984, 1.992};
  for (int k = 0; k <= 5; ++k) {
    const double g = gamma_k(k);
    EXPECT_LE(g, published[k]) << k;
    EXPECT_DOUBLE_EQ(std::ceil(g * 1000) / 1000, published[k]) << k;
    if (k >= 2) EXPECT_NEAR(g, published[k], 5e-4) << k;
  }
  EXPECT_NEAR(gamma_k(0), (1 + std::sqrt(5.0)) / 2, 1e-12);
  EXPECT_THROW(gamma_k(-1), std::invalid_argument);
}

TEST(GammaTest, RootOfOriginalPolynomialIncreasingAndBelowTwo) {
  double previous = 1.0;
  for (int k = 0; k <= 20; ++k) {
    const double g = gamma_k(k);
    EXPECT_GT(g, previous);
    EXPECT_LT(g, 2.0);
    auto f = [k](double x) { return std::pow(x, k + 3) - 2 * std::pow(x, k + 2) + 1; };
    EXPECT_LT(f(g - 1e-9), 0.0) << k;
    EXPECT_GT(f(g + 1e-9), 0.0) << k;
    previous = g;
  }
}

// Independent root of x^{2k+3} - 2x^{2k+2} + 1 on [1.5, 2]: negative at 1.5,
// equal to 1 at 2.
double sigma_root(int k) {
  auto f = [k](double x) { return std::pow(x, 2 * k + 3) - 2 * std::pow(x, 2 * k + 2) + 1; };
  double lo = 1.5, hi = 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0 ? lo : hi) = mid;
  }
  return lo;
}

TEST(GammaTest, SigmaEqualsGammaOfTwiceK) {
  for (int k = 0; k <= 10; ++k) EXPECT_NEAR(gamma_k(2 * k), sigma_root(k), 1e-8) << k;
}

}  // namespace
}  // namespace kdc
