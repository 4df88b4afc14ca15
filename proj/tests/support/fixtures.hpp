#pragma once

#include <vector>

#include "kdjm/graph.hpp"

namespace kdjm::testing {

inline WeightedGraph graph_of(std::size_t n, std::vector<Edge> edges) {
  return WeightedGraph::build(n, edges);
}

/// Triangle 0-1-2 with w(0,1)=3, w(1,2)=2, w(0,2)=1.
inline WeightedGraph weighted_triangle() { return graph_of(3, {{0, 1, 3}, {1, 2, 2}, {0, 2, 1}}); }

inline WeightedGraph unit_triangle() { return graph_of(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}); }

/// Unit-weight 3-cube.
inline WeightedGraph unit_cube() {
  std::vector<Edge> edges;
  for (VertexId v = 0; v < 8; ++v) {
    for (VertexId bit = 1; bit < 8; bit <<= 1) {
      if (!(v & bit)) edges.push_back({v, v | bit, 1});
    }
  }
  return graph_of(8, edges);
}

/// Path 0-1-2-...; consecutive weights from the list.
inline WeightedGraph path_graph(const std::vector<Weight>& weights) {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < weights.size(); ++i) edges.push_back({i, i + 1, weights[i]});
  return graph_of(weights.size() + 1, edges);
}

/// Star with center 0 and leaves 1..; leaf i has weight weights[i-1].
inline WeightedGraph star_graph(const std::vector<Weight>& weights) {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < weights.size(); ++i) edges.push_back({0, i + 1, weights[i]});
  return graph_of(weights.size() + 1, edges);
}

inline EdgeId edge_id(const WeightedGraph& g, VertexId u, VertexId v) { return g.find_edge(u, v); }

}  // namespace kdjm::testing
