#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kdjm/color_state.hpp"
#include "kdjm/graph.hpp"

namespace kdjm {

/// Edge set in which every vertex has at most b edges.
struct BMatching {
  std::vector<EdgeId> edges;
  std::vector<std::uint32_t> saturation;
  std::uint32_t b = 0;
  Weight weight = 0;
};

/// Scans `order` and keeps every edge whose endpoints both have fewer than b edges.
BMatching greedy_b_matching(const WeightedGraph& g, const SortedEdgeList& order, std::uint32_t b);
BMatching greedy_b_matching(const WeightedGraph& g, std::uint32_t b);

/// Per-edge color (kNoColor for edges outside the colored subgraph).
struct EdgeColoring {
  std::vector<Color> color;
  int num_colors = 0;  ///< number of distinct colors in use
};

/// Proper coloring of the given edges with at most max-degree + 1 colors.
EdgeColoring misra_gries_color(const WeightedGraph& g, std::span<const EdgeId> subgraph_edges);

/// (k-1)-matching by greedy, split into k matchings by edge coloring, then
/// each class is extended greedily with unused edges. k = 1 is greedy_it.
DisjointMatching b_greedy_and_extend(const WeightedGraph& g, int k);

}  // namespace kdjm
