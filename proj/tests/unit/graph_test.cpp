#include <gtest/gtest.h>

#include <sstream>
#include <stdexcept>

#include "fixtures.hpp"
#include "kdjm/instances.hpp"

namespace kdjm {
namespace {

using testing::edge_id;

TEST(BuildGraph, Triangle) {
  const auto g = testing::weighted_triangle();
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.num_edges(), 3u);
  EXPECT_EQ(g.max_degree(), 2u);
  EXPECT_EQ(g.max_demand(), 3u);
  EXPECT_EQ(g.total_demand(), 6u);
}

TEST(BuildGraph, CanonicalEdges) {
  const std::vector<Edge> triples{{2, 1, 4}, {1, 0, 2}};
  const auto g = WeightedGraph::build(3, triples);
  ASSERT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(g.edge(0), (Edge{0, 1, 2}));
  EXPECT_EQ(g.edge(1), (Edge{1, 2, 4}));
}

TEST(BuildGraph, AdjacencyIsSymmetric) {
  const auto g = testing::unit_cube();
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    EXPECT_EQ(g.degree(v), 3u);
    for (const auto& inc : g.incident(v)) {
      EXPECT_EQ(g.other(inc.edge, v), inc.neighbor);
      EXPECT_EQ(g.find_edge(inc.neighbor, v), inc.edge);
    }
  }
}

TEST(BuildGraph, TrianglePendantCounts) {
  const auto g = gen_triangle_pendant();
  EXPECT_EQ(g.num_vertices(), 6u);
  EXPECT_EQ(g.num_edges(), 6u);
  EXPECT_EQ(g.max_degree(), 3u);
  EXPECT_EQ(g.max_demand(), 1u);
}

GraphErrorKind build_error(std::size_t n, std::vector<Edge> triples) {
  try {
    WeightedGraph::build(n, triples);
  } catch (const GraphError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error";
  return GraphErrorKind::SelfLoop;
}

TEST(BuildGraph, Errors) {
  EXPECT_EQ(build_error(2, {{0, 0, 1}}), GraphErrorKind::SelfLoop);
  EXPECT_EQ(build_error(2, {{0, 1, 1}, {1, 0, 2}}), GraphErrorKind::DuplicateEdge);
  EXPECT_EQ(build_error(2, {{0, 1, 0}}), GraphErrorKind::ZeroWeight);
  EXPECT_EQ(build_error(2, {{0, 2, 1}}), GraphErrorKind::EndpointOutOfRange);
}

TEST(BuildGraph, ErrorNamesTriple) {
  try {
    const std::vector<Edge> triples{{0, 1, 1}, {3, 3, 7}};
    WeightedGraph::build(4, triples);
    FAIL();
  } catch (const GraphError& e) {
    EXPECT_EQ(e.triple(), (Edge{3, 3, 7}));
  }
}

WeightedGraph read_edge_list_text(const WeightedGraph& g) {
  std::stringstream ss;
  write_edge_list(g, ss);
  return read_edge_list(ss);
}

TEST(BuildGraph, EdgeListRoundTrip) {
  // Dense ids only: the reader drops vertices without edges.
  const auto g = read_edge_list_text(gen_rmat({.scale = 6, .edge_factor = 4, .seed = 9}));
  std::stringstream ss;
  write_edge_list(g, ss);
  const std::string first = ss.str();
  const auto back = read_edge_list(ss);
  EXPECT_EQ(back, g);
  std::stringstream again;
  write_edge_list(back, again);
  EXPECT_EQ(again.str(), first);
}

TEST(SortEdges, DistinctWeights) {
  const auto g = testing::weighted_triangle();
  const auto order = sort_edges_desc(g).order;
  ASSERT_EQ(order.size(), 3u);
  EXPECT_EQ(order[0], edge_id(g, 0, 1));
  EXPECT_EQ(order[1], edge_id(g, 1, 2));
  EXPECT_EQ(order[2], edge_id(g, 0, 2));
}

TEST(SortEdges, TiesAreLexicographic) {
  const auto g = testing::unit_cube();
  const auto order = sort_edges_desc(g).order;
  for (std::size_t i = 1; i < order.size(); ++i) {
    const Edge& a = g.edge(order[i - 1]);
    const Edge& b = g.edge(order[i]);
    EXPECT_LT(std::make_pair(a.u, a.v), std::make_pair(b.u, b.v));
  }
}

TEST(SortEdges, EmptyGraph) {
  const WeightedGraph g = WeightedGraph::build(4, {});
  EXPECT_TRUE(sort_edges_desc(g).order.empty());
}

TEST(SortEdges, DependsOnlyOnEdges) {
  std::vector<Edge> a{{0, 1, 5}, {2, 3, 5}, {1, 2, 7}, {0, 3, 1}};
  std::vector<Edge> b{a.rbegin(), a.rend()};
  const auto ga = WeightedGraph::build(4, a);
  const auto gb = WeightedGraph::build(4, b);
  EXPECT_EQ(sort_edges_desc(ga).order, sort_edges_desc(gb).order);
}

TEST(SortEdges, Ranks) {
  const auto g = testing::weighted_triangle();
  const auto sorted = sort_edges_desc(g);
  const auto rank = sorted.ranks();
  for (std::size_t i = 0; i < sorted.size(); ++i) EXPECT_EQ(rank[sorted.order[i]], i);
}

TEST(Validate, ValidTriangleSolution) {
  const auto g = testing::weighted_triangle();
  const auto s = DisjointMatching::from_classes(g, {{edge_id(g, 0, 1)}, {edge_id(g, 1, 2)}});
  const auto report = validate_solution(g, s);
  EXPECT_TRUE(report.ok()) << report.message;
  EXPECT_EQ(solution_weight(s), 5u);
}

TEST(Validate, SharedEndpoint) {
  const auto g = testing::weighted_triangle();
  const auto s = DisjointMatching::from_classes(g, {{edge_id(g, 0, 1), edge_id(g, 1, 2)}, {}});
  const auto report = validate_solution(g, s);
  EXPECT_EQ(report.kind, Violation::SharedEndpoint);
  EXPECT_EQ(report.vertex, 1u);
  EXPECT_EQ(report.cls, 0);
}

TEST(Validate, DuplicateAssignment) {
  const auto g = testing::weighted_triangle();
  const auto s = DisjointMatching::from_parts(3, {{0}, {0}}, {3, 3}, 6);
  EXPECT_EQ(validate_solution(g, s).kind, Violation::DuplicateAssignment);
}

TEST(Validate, WeightMismatch) {
  const auto g = testing::weighted_triangle();
  const auto s = DisjointMatching::from_parts(3, {{0}, {}}, {4, 0}, 4);
  EXPECT_EQ(validate_solution(g, s).kind, Violation::WeightMismatch);
}

TEST(Validate, EmptyClasses) {
  const auto g = testing::unit_cube();
  const DisjointMatching s(g.num_edges(), 3);
  EXPECT_TRUE(validate_solution(g, s).ok());
  EXPECT_EQ(solution_weight(s), 0u);
}

TEST(Validate, NoClasses) {
  const auto g = testing::unit_cube();
  EXPECT_THROW(DisjointMatching(g.num_edges(), 0), std::invalid_argument);
  const auto s = DisjointMatching::from_parts(g.num_edges(), {}, {}, 0);
  EXPECT_EQ(validate_solution(g, s).kind, Violation::ClassCount);
}

TEST(DisjointMatching, AssignAndUnassign) {
  const auto g = testing::weighted_triangle();
  DisjointMatching s(g.num_edges(), 2);
  s.assign(g, 0, 1);
  s.assign(g, 1, 0);
  EXPECT_EQ(s.total_weight(), g.weight(0) + g.weight(1));
  EXPECT_EQ(s.class_of(0), 1);
  s.unassign(g, 0);
  EXPECT_FALSE(s.assigned(0));
  EXPECT_EQ(s.total_weight(), g.weight(1));
  EXPECT_TRUE(validate_solution(g, s).ok());
}

}  // namespace
}  // namespace kdjm
