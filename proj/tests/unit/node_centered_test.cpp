#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "kdjm/exact.hpp"
#include "kdjm/iterative.hpp"
#include "kdjm/node_centered.hpp"
#include "oracles.hpp"

namespace kdjm {
namespace {

constexpr RatingFn kAllRatings[] = {RatingFn::Max, RatingFn::Avg, RatingFn::Median, RatingFn::Sum,
                                    RatingFn::KSum};

TEST(Rating, Examples) {
  const auto g = testing::star_graph({5, 3, 1});
  EXPECT_EQ(vertex_rating(g, 0, RatingFn::KSum, 2), (Rating{8, 1}));
  EXPECT_EQ(vertex_rating(g, 0, RatingFn::Median, 2), (Rating{3, 1}));
  EXPECT_EQ(vertex_rating(g, 0, RatingFn::Max, 2), (Rating{5, 1}));
  EXPECT_EQ(vertex_rating(g, 0, RatingFn::Sum, 2), (Rating{9, 1}));
  EXPECT_EQ(vertex_rating(g, 0, RatingFn::Avg, 2), (Rating{3, 1}));
  EXPECT_EQ(vertex_rating(g, 0, RatingFn::KSum, 10), (Rating{9, 1}));
}

TEST(Rating, LowerMedianAndExactAverage) {
  const auto g = testing::star_graph({4, 1, 7, 2});
  EXPECT_EQ(vertex_rating(g, 0, RatingFn::Median, 1), (Rating{2, 1}));
  EXPECT_EQ(vertex_rating(g, 0, RatingFn::Avg, 1), (Rating{14, 4}));
  EXPECT_TRUE(vertex_rating(g, 0, RatingFn::Avg, 1) < (Rating{4, 1}));
}

TEST(Rating, IsolatedVertex) {
  const auto g = testing::graph_of(3, {{0, 1, 4}});
  for (auto fn : kAllRatings) EXPECT_EQ(vertex_rating(g, 2, fn, 3), (Rating{0, 1}));
}

TEST(Rating, Parse) {
  for (auto fn : kAllRatings) EXPECT_EQ(parse_rating(to_string(fn)), fn);
  EXPECT_EQ(parse_rating("KSUM"), RatingFn::KSum);
  EXPECT_THROW(parse_rating("mode"), std::invalid_argument);
}

TEST(Theta, Parse) {
  EXPECT_EQ(Theta::parse("0.2"), (Theta{1, 5}));
  EXPECT_EQ(Theta::parse("1/5"), (Theta{1, 5}));
  EXPECT_EQ(Theta::parse("0"), (Theta{0, 1}));
  EXPECT_EQ(Theta::parse("1"), (Theta{1, 1}));
  EXPECT_EQ(Theta::parse("0.50").to_string(), "1/2");
  EXPECT_THROW(Theta::parse("1.5"), std::invalid_argument);
  EXPECT_THROW(Theta::parse("3/2"), std::invalid_argument);
  EXPECT_THROW(Theta::parse("x"), std::invalid_argument);
}

TEST(NodeCentered, TriangleKSum) {
  EXPECT_EQ(node_centered(testing::weighted_triangle(), 2, RatingFn::KSum, Theta{0, 1}).total_weight(), 5u);
}

TEST(NodeCentered, ThresholdDefersLightEdges) {
  // Vertex 0 has five weight-3 edges and outrates vertex 1 under SUM, so
  // without a threshold it takes 0-1 before 1-2 (weight 10) is seen.
  const auto g = testing::graph_of(
      7, {{0, 1, 3}, {1, 2, 10}, {0, 3, 3}, {0, 4, 3}, {0, 5, 3}, {0, 6, 3}});
  EXPECT_EQ(node_centered(g, 1, RatingFn::Sum, Theta{0, 1}).total_weight(), 3u);
  EXPECT_EQ(greedy_it(g, 1).total_weight(), 13u);
  const auto s = node_centered(g, 1, RatingFn::Sum, Theta{1, 1});
  EXPECT_EQ(s.total_weight(), 13u);
  EXPECT_EQ(s.class_of(testing::edge_id(g, 1, 2)), 0);
}

TEST(NodeCentered, OnlyCommonFreeColors) {
  // With k = 1 the second edge at a vertex is never picked.
  const auto g = testing::star_graph({5, 4, 3});
  for (auto fn : kAllRatings) EXPECT_EQ(node_centered(g, 1, fn, Theta{}).total_weight(), 5u);
}

TEST(NodeCentered, ValidDeterministicAndBounded) {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 30; ++t) {
    const auto g = testing::random_graph(rng, 7, 0.5, 20, 14);
    for (int k : {1, 2, 3}) {
      const Weight opt = brute_force_kdjm(g, k).weight;
      for (auto fn : kAllRatings) {
        for (Theta th : {Theta{0, 1}, Theta{1, 5}, Theta{1, 2}, Theta{1, 1}}) {
          const auto s = node_centered(g, k, fn, th);
          ASSERT_TRUE(validate_solution(g, s).ok());
          EXPECT_LE(s.total_weight(), opt);
          EXPECT_EQ(node_centered(g, k, fn, th).sorted_classes(), s.sorted_classes());
        }
      }
    }
  }
}

}  // namespace
}  // namespace kdjm
