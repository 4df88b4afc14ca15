#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kdjm/graph.hpp"
#include "kdjm/iterative.hpp"

namespace kdjm {

/// How the primal-dual blossom algorithm is initialised.
enum class BlossomStart {
  /// Optimal half-integral fractional matching and its duals; only vertices
  /// left exposed by odd cycles start as tree roots.
  Fractional,
  /// Empty matching, all vertex duals equal to the maximum weight.
  Empty,
};

/// Exact maximum-weight matching over the available edges of g.
Matching blossom_max_weight_matching(const WeightedGraph& g, const EdgeMask& available,
                                     BlossomStart start = BlossomStart::Fractional);

inline Matching blossom_max_weight_matching(const WeightedGraph& g,
                                            BlossomStart start = BlossomStart::Fractional) {
  return blossom_max_weight_matching(g, all_available(g), start);
}

/// Class i is a maximum-weight matching of the graph left after removing
/// the edges of classes 0..i-1.
DisjointMatching blossom_it(const WeightedGraph& g, int k,
                            BlossomStart start = BlossomStart::Fractional,
                            const ClassHook& after_class = {});

namespace detail {

/// Raw edge for the matching engine: endpoints in 0..n-1, positive weight.
struct WeightedPair {
  std::uint32_t i;
  std::uint32_t j;
  std::int64_t w;
};

/// mate[v] = index into `edges` of the matched edge at v, or -1.
std::vector<std::int64_t> max_weight_matching(std::size_t n, std::span<const WeightedPair> edges,
                                              BlossomStart start);

/// Optimal fractional matching (x_e in {0, 1/2, 1}) with duals, obtained
/// from a maximum-weight assignment on the bipartite double cover.
struct FractionalMatching {
  std::vector<std::uint8_t> twice_x;  ///< 2 * x_e per edge
  std::vector<std::int64_t> twice_y;  ///< 2 * y_v per vertex
};

FractionalMatching max_weight_fractional_matching(std::size_t n,
                                                  std::span<const WeightedPair> edges);

}  // namespace detail

}  // namespace kdjm
