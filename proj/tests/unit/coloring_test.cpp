#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "kdjm/coloring.hpp"
#include "kdjm/iterative.hpp"
#include "oracles.hpp"

namespace kdjm {
namespace {

std::vector<EdgeId> all_edges(const WeightedGraph& g) {
  std::vector<EdgeId> e(g.num_edges());
  std::iota(e.begin(), e.end(), EdgeId{0});
  return e;
}

TEST(GreedyBMatching, UnitTriangleTwoMatching) {
  const auto bm = greedy_b_matching(testing::unit_triangle(), 2);
  EXPECT_EQ(bm.edges.size(), 3u);
  EXPECT_EQ(bm.weight, 3u);
}

TEST(GreedyBMatching, WeightedTriangleOneMatching) {
  const auto g = testing::weighted_triangle();
  const auto bm = greedy_b_matching(g, 1);
  ASSERT_EQ(bm.edges.size(), 1u);
  EXPECT_EQ(bm.edges[0], testing::edge_id(g, 0, 1));
}

TEST(GreedyBMatching, StarSaturates) {
  const auto bm = greedy_b_matching(testing::star_graph({5, 4, 3}), 2);
  EXPECT_EQ(bm.weight, 9u);
  EXPECT_EQ(bm.saturation[0], 2u);
}

TEST(GreedyBMatching, HalfApproximation) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 150; ++t) {
    const auto g = testing::random_graph(rng, 2 + rng() % 7, 0.5, 25, 16);
    for (unsigned b = 1; b <= 3; ++b) {
      const auto bm = greedy_b_matching(g, b);
      for (auto s : bm.saturation) EXPECT_LE(s, b);
      EXPECT_GE(2 * bm.weight, testing::exhaustive_b_matching_weight(g, b));
    }
  }
}

TEST(MisraGries, Triangle) {
  const auto g = testing::unit_triangle();
  const auto edges = all_edges(g);
  const auto col = misra_gries_color(g, edges);
  EXPECT_EQ(col.num_colors, 3);
  EXPECT_TRUE(testing::proper_coloring(g, edges, col.color));
}

TEST(MisraGries, PathAndStar) {
  const auto p = testing::path_graph({1, 1});
  EXPECT_EQ(misra_gries_color(p, all_edges(p)).num_colors, 2);
  const auto s = testing::star_graph({1, 1, 1});
  EXPECT_EQ(misra_gries_color(s, all_edges(s)).num_colors, 3);
}

TEST(MisraGries, SubgraphOnly) {
  const auto g = testing::unit_cube();
  const std::vector<EdgeId> sub{0, 5};
  const auto col = misra_gries_color(g, sub);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const bool listed = e == 0 || e == 5;
    EXPECT_EQ(col.color[e] != kNoColor, listed);
  }
}

TEST(MisraGries, AtMostMaxDegreePlusOne) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 60; ++t) {
    const auto g = testing::random_graph(rng, 10 + rng() % 80, 0.05 + 0.3 * (rng() % 100) / 100.0, 10);
    const auto edges = all_edges(g);
    const auto col = misra_gries_color(g, edges);
    EXPECT_TRUE(testing::proper_coloring(g, edges, col.color));
    EXPECT_LE(static_cast<std::size_t>(col.num_colors), g.max_degree() + 1);
  }
}

TEST(BGreedyExtend, UnitTriangle) {
  EXPECT_EQ(b_greedy_and_extend(testing::unit_triangle(), 3).total_weight(), 3u);
}

TEST(BGreedyExtend, StarExtends) {
  const auto s = b_greedy_and_extend(testing::star_graph({5, 4, 3}), 2);
  EXPECT_EQ(s.total_weight(), 9u);
}

TEST(BGreedyExtend, EmptyGraph) {
  EXPECT_EQ(b_greedy_and_extend(WeightedGraph::build(3, {}), 4).total_weight(), 0u);
}

TEST(BGreedyExtend, KOneIsGreedy) {
  std::mt19937_64 rng(2);
  const auto g = testing::random_graph(rng, 30, 0.2, 40);
  EXPECT_EQ(b_greedy_and_extend(g, 1).sorted_classes(), greedy_it(g, 1).sorted_classes());
}

TEST(BGreedyExtend, NoLossFromColoring) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 40; ++t) {
    const auto g = testing::random_graph(rng, 40, 0.25, 100);
    for (int k : {2, 3, 5, 8}) {
      const auto s = b_greedy_and_extend(g, k);
      ASSERT_TRUE(validate_solution(g, s).ok());
      EXPECT_GE(s.total_weight(), greedy_b_matching(g, static_cast<std::uint32_t>(k - 1)).weight);
    }
  }
}

}  // namespace
}  // namespace kdjm
