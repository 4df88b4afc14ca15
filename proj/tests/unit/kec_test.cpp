#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "kdjm/exact.hpp"
#include "kdjm/kec.hpp"
#include "oracles.hpp"

namespace kdjm {
namespace {

using testing::edge_id;

std::vector<KecFlags> all_flag_sets() {
  std::vector<KecFlags> out;
  for (int bits = 0; bits < 16; ++bits) {
    out.push_back({(bits & 1) != 0, (bits & 2) != 0, (bits & 4) != 0, (bits & 8) != 0});
  }
  return out;
}

TEST(KecFlags, ParseAndPrint) {
  EXPECT_EQ(KecFlags::parse("CC+RL"), KecFlags::defaults());
  EXPECT_EQ(KecFlags::parse("rl+cc"), KecFlags::defaults());
  EXPECT_EQ(KecFlags::parse("none"), KecFlags::none());
  EXPECT_EQ(KecFlags::parse(""), KecFlags::none());
  EXPECT_EQ((KecFlags{true, true, true, true}).to_string(), "CC+LC+RL+LF");
  EXPECT_EQ(KecFlags::none().to_string(), "none");
  for (const auto& f : all_flag_sets()) EXPECT_EQ(KecFlags::parse(f.to_string()), f);
  EXPECT_THROW(KecFlags::parse("CC+XX"), std::invalid_argument);
}

TEST(CommonFreeColor, Intersection) {
  const auto g = testing::graph_of(5, {{0, 1, 1}, {0, 2, 1}, {2, 3, 1}, {3, 4, 1}});
  ColorState st(g, 2);
  st.set_color(edge_id(g, 2, 3), 0);
  EXPECT_EQ(find_common_free_color(st, 0, 2), 1);
  st.set_color(edge_id(g, 0, 1), 1);
  EXPECT_FALSE(find_common_free_color(st, 0, 2).has_value());
}

TEST(CommonFreeColor, LightestColor) {
  const auto g = testing::graph_of(6, {{0, 1, 10}, {2, 3, 4}, {4, 5, 1}});
  ColorState st(g, 3);
  st.set_color(edge_id(g, 0, 1), 0);
  st.set_color(edge_id(g, 2, 3), 2);
  // Vertices 4 and 5 are free in every color.
  EXPECT_EQ(find_common_free_color(st, 4, 5, false), 0);
  EXPECT_EQ(find_common_free_color(st, 4, 5, true), 1);
  st.set_color(edge_id(g, 4, 5), 1);
  EXPECT_EQ(st.color_weight(1), 1u);
  const auto h = testing::graph_of(8, {{0, 1, 10}, {2, 3, 4}, {4, 5, 1}, {6, 7, 1}});
  ColorState s2(h, 3);
  s2.set_color(edge_id(h, 0, 1), 0);
  s2.set_color(edge_id(h, 2, 3), 2);
  s2.set_color(edge_id(h, 4, 5), 1);
  s2.set_color(edge_id(h, 6, 7), 1);
  EXPECT_EQ(s2.color_weight(1), 2u);
  // Vertices 4 and 5 are free in {0, 2}.
  EXPECT_EQ(find_common_free_color(s2, 4, 5, false), 0);
  EXPECT_EQ(find_common_free_color(s2, 4, 5, true), 2);
}

TEST(InvertCdPath, SwapsAlternatingPath) {
  // u=0 -a=1 colored d=1, 1-2 colored c=0.
  const auto g = testing::graph_of(4, {{0, 1, 1}, {1, 2, 1}, {0, 3, 1}});
  ColorState st(g, 2);
  st.set_color(edge_id(g, 0, 1), 1);
  st.set_color(edge_id(g, 1, 2), 0);
  invert_cd_path(st, 0, 0, 1);
  EXPECT_EQ(st.color_of(edge_id(g, 0, 1)), 0);
  EXPECT_EQ(st.color_of(edge_id(g, 1, 2)), 1);
  EXPECT_TRUE(st.is_free(0, 1));
  EXPECT_TRUE(st.consistent());
}

TEST(InvertCdPath, SingleEdge) {
  const auto g = testing::graph_of(2, {{0, 1, 1}});
  ColorState st(g, 2);
  st.set_color(0, 1);
  invert_cd_path(st, 0, 0, 1);
  EXPECT_EQ(st.color_of(0), 0);
}

TEST(InvertCdPath, RequiresCFree) {
  const auto g = testing::graph_of(3, {{0, 1, 1}, {0, 2, 1}});
  ColorState st(g, 2);
  st.set_color(0, 0);
  st.set_color(1, 1);
  EXPECT_ANY_THROW(invert_cd_path(st, 0, 0, 1));
}

TEST(RotateFan, LengthZero) {
  const auto g = testing::graph_of(2, {{0, 1, 1}});
  ColorState st(g, 1);
  const Fan fan{0, {1}, {0}};
  rotate_fan(st, fan, 0, RotateMode::ShortestPrefix);
  EXPECT_EQ(st.color_of(0), 0);
}

TEST(RotateFan, TwoVertexFan) {
  // center 0, w0 = 1 (uncolored), w1 = 2 with edge color 0 free on w0.
  const auto g = testing::graph_of(3, {{0, 1, 1}, {0, 2, 1}});
  for (auto mode : {RotateMode::ShortestPrefix, RotateMode::Full}) {
    ColorState st(g, 2);
    st.set_color(edge_id(g, 0, 2), 0);
    const Fan fan{0, {1, 2}, {edge_id(g, 0, 1), edge_id(g, 0, 2)}};
    rotate_fan(st, fan, 1, mode);
    // Color 1 is already free on w0, so the shortest prefix stops there.
    const bool full = mode == RotateMode::Full;
    EXPECT_EQ(st.color_of(edge_id(g, 0, 1)), full ? 0 : 1);
    EXPECT_EQ(st.color_of(edge_id(g, 0, 2)), full ? 1 : 0);
    EXPECT_TRUE(st.consistent());
  }
}

TEST(BuildFan, SingleEdge) {
  const auto g = testing::graph_of(2, {{0, 1, 1}});
  ColorState st(g, 2);
  const auto fan = build_fan(st, 0, 1, KecFlags::none());
  EXPECT_EQ(fan.vertices, (std::vector<VertexId>{1}));
}

TEST(BuildFan, ChainExtends) {
  // center 0; uncolored 0-1; 0-2 colored 0 (free on 1); 0-3 colored 1 (free on 2).
  const auto g = testing::graph_of(5, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {2, 4, 1}});
  ColorState st(g, 3);
  st.set_color(edge_id(g, 0, 2), 0);
  st.set_color(edge_id(g, 0, 3), 1);
  st.set_color(edge_id(g, 2, 4), 2);
  const auto fan = build_fan(st, 0, 1, KecFlags::none());
  EXPECT_EQ(fan.vertices, (std::vector<VertexId>{1, 2, 3}));
  for (std::size_t i = 1; i < fan.vertices.size(); ++i) {
    EXPECT_TRUE(st.is_free(fan.vertices[i - 1], st.color_of(fan.edges[i])));
  }
}

TEST(BuildFan, LargeFanPrefersUnsaturated) {
  // center 0, k=2. 0-1 uncolored; 0-2 color 0, 0-3 color 1. Vertex 1 free {0, 1}.
  // Vertex 2 saturated (0-2, 2-4), vertex 3 unsaturated.
  const auto g = testing::graph_of(5, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {2, 4, 1}});
  ColorState st(g, 2);
  st.set_color(edge_id(g, 0, 2), 0);
  st.set_color(edge_id(g, 0, 3), 1);
  st.set_color(edge_id(g, 2, 4), 1);
  const auto plain = build_fan(st, 0, 1, KecFlags::none());
  ASSERT_GE(plain.vertices.size(), 2u);
  EXPECT_EQ(plain.vertices[1], 2u);
  KecFlags lf = KecFlags::none();
  lf.lf = true;
  const auto large = build_fan(st, 0, 1, lf);
  ASSERT_GE(large.vertices.size(), 2u);
  EXPECT_EQ(large.vertices[1], 3u);
}

TEST(KEc, TriangleTwoColors) {
  const auto g = testing::weighted_triangle();
  for (const auto& f : all_flag_sets()) {
    const auto s = k_ec(g, 2, f);
    EXPECT_EQ(s.total_weight(), 5u) << f.to_string();
    EXPECT_FALSE(s.assigned(edge_id(g, 0, 2)));
  }
}

TEST(KEc, TriangleThreeColors) {
  EXPECT_EQ(k_ec(testing::weighted_triangle(), 3).total_weight(), 6u);
}

TEST(KEc, FullColoringWithMaxDegreePlusOne) {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 40; ++t) {
    const auto g = testing::random_graph(rng, 30 + rng() % 50, 0.2, 100);
    for (const auto& f : all_flag_sets()) {
      const auto s = k_ec(g, static_cast<int>(g.max_degree()) + 1, f);
      EXPECT_EQ(s.total_weight(), g.total_demand()) << f.to_string();
    }
  }
}

TEST(KEc, StepsKeepStateProperAndMonotone) {
  std::mt19937_64 rng(62);
  for (int t = 0; t < 20; ++t) {
    const auto g = testing::random_graph(rng, 25, 0.3, 50);
    for (const auto& f : all_flag_sets()) {
      for (int k : {1, 2, 4}) {
        ColorState st(g, k);
        std::vector<bool> colored(g.num_edges(), false);
        for (EdgeId e : sort_edges_desc(g).order) {
          if (st.saturated(g.edge(e).u) || st.saturated(g.edge(e).v)) continue;
          try_color_edge(st, e, f);
          ASSERT_TRUE(st.consistent());
          for (EdgeId x = 0; x < g.num_edges(); ++x) {
            if (colored[x]) {
              ASSERT_TRUE(st.colored(x));
            }
            colored[x] = st.colored(x);
          }
        }
        for (VertexId v = 0; v < g.num_vertices(); ++v) EXPECT_LE(st.colored_degree(v), static_cast<unsigned>(k));
      }
    }
  }
}

TEST(KEc, BelowOptimumOnSmallGraphs) {
  std::mt19937_64 rng(63);
  for (int t = 0; t < 40; ++t) {
    const auto g = testing::random_graph(rng, 7, 0.5, 20, 14);
    for (int k : {1, 2, 3}) {
      const Weight opt = brute_force_kdjm(g, k).weight;
      for (const auto& f : all_flag_sets()) {
        const auto s = k_ec(g, k, f);
        ASSERT_TRUE(validate_solution(g, s).ok());
        EXPECT_LE(s.total_weight(), opt);
      }
    }
  }
}

TEST(KEc, LightestColorWeightsTracked) {
  std::mt19937_64 rng(65);
  const auto g = testing::random_graph(rng, 40, 0.3, 1000);
  KecFlags f = KecFlags::defaults();
  f.lc = true;
  const auto s = k_ec(g, 4, f);
  ASSERT_TRUE(validate_solution(g, s).ok());
  for (ClassId c = 0; c < 4; ++c) {
    Weight w = 0;
    for (auto e : s.class_edges(c)) w += g.weight(e);
    EXPECT_EQ(w, s.class_weight(c));
  }
}

}  // namespace
}  // namespace kdjm
