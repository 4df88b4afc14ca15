#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "kdjm/instances.hpp"
#include "kdjm/iterative.hpp"
#include "oracles.hpp"

namespace kdjm {
namespace {

using testing::edge_id;

TEST(GreedyPass, Triangle) {
  const auto g = testing::weighted_triangle();
  auto mask = all_available(g);
  const auto m = greedy_matching_pass(g, sort_edges_desc(g), mask);
  ASSERT_EQ(m.edges.size(), 1u);
  EXPECT_EQ(m.edges[0], edge_id(g, 0, 1));
  EXPECT_EQ(m.weight, 3u);
  EXPECT_FALSE(mask[edge_id(g, 0, 1)]);
  EXPECT_TRUE(mask[edge_id(g, 1, 2)]);
}

TEST(GreedyPass, UnitCube) {
  const auto g = testing::unit_cube();
  auto mask = all_available(g);
  const auto m = greedy_matching_pass(g, sort_edges_desc(g), mask);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (auto e : m.edges) pairs.emplace_back(g.edge(e).u, g.edge(e).v);
  std::sort(pairs.begin(), pairs.end());
  const std::vector<std::pair<VertexId, VertexId>> expected{{0, 1}, {2, 3}, {4, 5}, {6, 7}};
  EXPECT_EQ(pairs, expected);
}

TEST(GreedyPass, NothingAvailable) {
  const auto g = testing::weighted_triangle();
  EdgeMask mask(g.num_edges(), 0);
  EXPECT_TRUE(greedy_matching_pass(g, sort_edges_desc(g), mask).edges.empty());
}

TEST(GreedyIt, HypercubePendant) {
  const auto g = gen_hypercube_pendant(3);
  EXPECT_EQ(greedy_it(g, 3).total_weight(), 12u * 1001u);
}

TEST(GreedyIt, UnitTriangle) {
  const auto g = testing::unit_triangle();
  const auto s = greedy_it(g, 3);
  EXPECT_EQ(s.total_weight(), 3u);
  for (ClassId c = 0; c < 3; ++c) EXPECT_EQ(s.class_edges(c).size(), 1u);
}

TEST(GreedyIt, HalfApproximationForOneClass) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const auto g = testing::random_graph(rng, 7, 0.5, 30);
    const Weight opt = testing::exhaustive_matching_weight(g);
    EXPECT_GE(2 * greedy_it(g, 1).total_weight(), opt);
  }
}

TEST(GreedyIt, PrefixProperty) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const auto g = testing::random_graph(rng, 30, 0.2, 50);
    for (int k = 1; k < 6; ++k) {
      const auto a = greedy_it(g, k);
      const auto b = greedy_it(g, k + 1);
      EXPECT_LE(a.total_weight(), b.total_weight());
      for (ClassId c = 0; c < k; ++c) {
        EXPECT_EQ(a.sorted_classes()[static_cast<std::size_t>(c)],
                  b.sorted_classes()[static_cast<std::size_t>(c)]);
      }
    }
  }
}

TEST(GreedyIt, HookRunsAfterEveryClass) {
  const auto g = testing::unit_cube();
  std::vector<ClassId> seen;
  greedy_it(g, 3, [&](DisjointMatching&, ClassId c) { seen.push_back(c); });
  EXPECT_EQ(seen, (std::vector<ClassId>{0, 1, 2}));
}

TEST(GpaBuild, PathKeptIntact) {
  const auto g = testing::path_graph({5, 4});
  const auto pc = gpa_build(g, sort_edges_desc(g), all_available(g));
  ASSERT_EQ(pc.items.size(), 1u);
  EXPECT_FALSE(pc.items[0].cycle);
  EXPECT_EQ(pc.items[0].edges.size(), 2u);
}

TEST(GpaBuild, TriangleDoesNotClose) {
  const auto g = testing::weighted_triangle();
  const auto pc = gpa_build(g, sort_edges_desc(g), all_available(g));
  ASSERT_EQ(pc.items.size(), 1u);
  EXPECT_FALSE(pc.items[0].cycle);
  EXPECT_EQ(pc.items[0].edges.size(), 2u);
}

TEST(GpaBuild, FourCycleCloses) {
  const auto g = testing::graph_of(4, {{0, 1, 9}, {1, 2, 7}, {2, 3, 5}, {0, 3, 3}});
  const auto pc = gpa_build(g, sort_edges_desc(g), all_available(g));
  ASSERT_EQ(pc.items.size(), 1u);
  EXPECT_TRUE(pc.items[0].cycle);
  EXPECT_EQ(pc.items[0].edges.size(), 4u);
}

TEST(GpaBuild, StructuresAreVertexDisjointChains) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto g = testing::random_graph(rng, 25, 0.3, 40);
    const auto pc = gpa_build(g, sort_edges_desc(g), all_available(g));
    std::vector<int> deg(g.num_vertices(), 0);
    for (const auto& item : pc.items) {
      for (std::size_t i = 0; i < item.edges.size(); ++i) {
        const Edge& a = g.edge(item.edges[i]);
        ++deg[a.u];
        ++deg[a.v];
        const bool wraps = item.cycle && i + 1 == item.edges.size();
        if (i + 1 < item.edges.size() || wraps) {
          const Edge& b = g.edge(item.edges[wraps ? 0 : i + 1]);
          EXPECT_TRUE(a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v);
        }
      }
      if (item.cycle) {
        EXPECT_EQ(item.edges.size() % 2, 0u);
      }
    }
    for (int d : deg) EXPECT_LE(d, 2);
  }
}

TEST(DpMatching, Examples) {
  const std::vector<Weight> p{5, 3, 4};
  EXPECT_EQ(dp_optimal_matching(p, false).weight, 9u);
  EXPECT_EQ(dp_optimal_matching(p, false).picked, (std::vector<std::size_t>{0, 2}));
  const std::vector<Weight> single{7};
  EXPECT_EQ(dp_optimal_matching(single, false).weight, 7u);
  const std::vector<Weight> cyc{1, 9, 1, 9};
  EXPECT_EQ(dp_optimal_matching(cyc, true).weight, 18u);
  EXPECT_EQ(dp_optimal_matching({}, false).weight, 0u);
}

TEST(DpMatching, MatchesExhaustive) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<Weight> w(1, 20);
  for (std::size_t len = 1; len <= 12; ++len) {
    for (int t = 0; t < 40; ++t) {
      std::vector<Weight> ws(len);
      for (auto& x : ws) x = w(rng);
      EXPECT_EQ(dp_optimal_matching(ws, false).weight, testing::exhaustive_path_matching(ws, false));
      if (len >= 4 && len % 2 == 0) {
        const auto sel = dp_optimal_matching(ws, true);
        EXPECT_EQ(sel.weight, testing::exhaustive_path_matching(ws, true));
        if (!sel.picked.empty()) {
          EXPECT_FALSE(sel.picked.front() == 0 && sel.picked.back() == len - 1);
        }
      }
    }
  }
}

TEST(GpaIt, Triangle) {
  const auto g = testing::weighted_triangle();
  EXPECT_EQ(gpa_it(g, 1).total_weight(), 3u);
  EXPECT_EQ(gpa_it(g, 2).total_weight(), 5u);
}

TEST(GpaIt, EmptyGraph) {
  const auto g = WeightedGraph::build(5, {});
  EXPECT_EQ(gpa_it(g, 3).total_weight(), 0u);
}

TEST(GpaIt, ValidOnRandomGraphs) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 30; ++t) {
    const auto g = testing::random_graph(rng, 40, 0.2, 100);
    for (int k : {1, 3, 6}) {
      const auto s = gpa_it(g, k);
      EXPECT_TRUE(validate_solution(g, s).ok());
    }
  }
}

}  // namespace
}  // namespace kdjm
