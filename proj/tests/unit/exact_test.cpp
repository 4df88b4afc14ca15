#include <gtest/gtest.h>

#include <random>
#include <regex>
#include <sstream>

#include "fixtures.hpp"
#include "kdjm/blossom.hpp"
#include "kdjm/exact.hpp"
#include "kdjm/instances.hpp"
#include "oracles.hpp"

namespace kdjm {
namespace {

TEST(BruteForce, UnitTriangle) {
  const auto g = testing::unit_triangle();
  EXPECT_EQ(brute_force_kdjm(g, 2).weight, 2u);
  EXPECT_EQ(brute_force_kdjm(g, 3).weight, 3u);
}

TEST(BruteForce, TrianglePendant) {
  const auto g = gen_triangle_pendant();
  const auto r = brute_force_kdjm(g, 3);
  EXPECT_EQ(r.weight, 6u);
  EXPECT_TRUE(validate_solution(g, r.solution).ok());
  EXPECT_EQ(r.solution.total_weight(), 6u);
  EXPECT_GT(r.explored, 0u);
}

TEST(BruteForce, HypercubePendant) {
  const auto g = gen_hypercube_pendant(2);
  // Q_2 with two pendants per vertex: the 8 pendant edges fill both classes.
  EXPECT_EQ(brute_force_kdjm(g, 2).weight, 8000u);
}

TEST(BruteForce, Limits) {
  const auto g = gen_hypercube_pendant(3);
  EXPECT_THROW(brute_force_kdjm(g, 3), LimitExceeded);
  EXPECT_THROW(brute_force_kdjm(testing::unit_triangle(), 5), LimitExceeded);
  EXPECT_EQ(brute_force_kdjm(testing::unit_triangle(), 5, {24, 5}).weight, 3u);
}

TEST(BruteForce, MatchesEnumeration) {
  std::mt19937_64 rng(91);
  for (int t = 0; t < 60; ++t) {
    const auto g = testing::random_graph(rng, 2 + rng() % 6, 0.5, 15, 9);
    for (int k = 1; k <= 3; ++k) {
      const auto r = brute_force_kdjm(g, k);
      EXPECT_EQ(r.weight, testing::enumerate_kdjm(g, k));
      EXPECT_TRUE(validate_solution(g, r.solution).ok());
      EXPECT_EQ(r.solution.total_weight(), r.weight);
    }
  }
}

TEST(BruteForce, MonotoneAndDoublingBound) {
  std::mt19937_64 rng(92);
  for (int t = 0; t < 40; ++t) {
    const auto g = testing::random_graph(rng, 8, 0.4, 20, 14);
    Weight prev = 0;
    std::vector<Weight> opt{0};
    for (int k = 1; k <= 4; ++k) {
      opt.push_back(brute_force_kdjm(g, k).weight);
      EXPECT_GE(opt.back(), prev);
      prev = opt.back();
    }
    for (int k = 1; k <= 4; ++k) EXPECT_LE(opt[static_cast<std::size_t>(k)], 2 * opt[static_cast<std::size_t>((k + 1) / 2)]);
  }
}

TEST(BruteForce, SingleClassIsMaximumMatching) {
  std::mt19937_64 rng(93);
  for (int t = 0; t < 50; ++t) {
    const auto g = testing::random_graph(rng, 8, 0.5, 20, 14);
    EXPECT_EQ(brute_force_kdjm(g, 1).weight, blossom_max_weight_matching(g).weight);
  }
}

std::size_t count(const std::string& text, const std::string& pattern) {
  const std::regex re(pattern, std::regex::multiline);
  return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re),
                                                std::sregex_iterator()));
}

TEST(ExportIlp, TriangleCounts) {
  const auto text = export_ilp_string(testing::weighted_triangle(), 2);
  EXPECT_EQ(count(text, "^ v[0-9]+_c[0-9]+:"), 6u);
  EXPECT_EQ(count(text, "^ e[0-9]+:"), 3u);
  const auto binaries = text.substr(text.find("Binary\n"));
  EXPECT_EQ(count(binaries, "^ x_e[0-9]+_c[0-9]+$"), 6u);
  EXPECT_NE(text.find("Maximize"), std::string::npos);
  EXPECT_NE(text.find("Subject To"), std::string::npos);
  EXPECT_EQ(text.substr(text.size() - 4), "End\n");
  EXPECT_NE(text.find("3 x_e0_c0 + 3 x_e0_c1"), std::string::npos);
}

TEST(ExportIlp, EmptyGraph) {
  const auto text = export_ilp_string(WeightedGraph::build(0, {}), 3);
  EXPECT_EQ(count(text, "x_e"), 0u);
}

TEST(ExportIlp, ByteStable) {
  const auto g = gen_rmat({.scale = 5, .edge_factor = 4, .seed = 3});
  EXPECT_EQ(export_ilp_string(g, 3), export_ilp_string(g, 3));
  std::ostringstream os;
  export_ilp(g, 3, os);
  EXPECT_EQ(os.str(), export_ilp_string(g, 3));
}

TEST(ExportIlp, UnwritablePath) {
  EXPECT_THROW(export_ilp(testing::unit_triangle(), 2, std::filesystem::path("/nonexistent/dir/model.lp")),
               IoError);
}

}  // namespace
}  // namespace kdjm
