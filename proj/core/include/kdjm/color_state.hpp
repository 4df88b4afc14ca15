#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kdjm/graph.hpp"

namespace kdjm {

using Color = std::int32_t;
inline constexpr Color kNoColor = -1;

/// Partial edge coloring with a palette of k colors. For every vertex and
/// color it records which incident edge (if any) carries that color, so
/// free-color tests and "follow the c-edge at v" are O(1).
class ColorState {
 public:
  ColorState(const WeightedGraph& g, int k);

  const WeightedGraph& graph() const noexcept { return *g_; }
  int k() const noexcept { return k_; }

  Color color_of(EdgeId e) const { return color_[e]; }
  bool colored(EdgeId e) const { return color_[e] != kNoColor; }
  EdgeId edge_with(VertexId v, Color c) const { return slot_[index(v, c)]; }
  bool is_free(VertexId v, Color c) const { return slot_[index(v, c)] == kNoEdge; }
  std::uint32_t colored_degree(VertexId v) const { return degree_[v]; }
  bool saturated(VertexId v) const { return degree_[v] >= static_cast<std::uint32_t>(k_); }
  Weight color_weight(Color c) const { return color_weight_[static_cast<std::size_t>(c)]; }

  /// Free color on v: lowest index, or with `lightest` the one of minimum
  /// total weight (ties to the lowest index). kNoColor if v is saturated.
  Color free_color(VertexId v, bool lightest) const;

  /// Colors an uncolored edge; c must be free on both endpoints.
  void set_color(EdgeId e, Color c);

  /// Gives each listed edge its new color at once. Intermediate conflicts
  /// among the listed edges are allowed; the final state must be proper.
  void recolor(std::span<const EdgeId> edges, std::span<const Color> colors);

  /// Final classes, one per color.
  DisjointMatching to_solution() const;

  /// Full consistency check (properness, slot table, degrees, weights).
  bool consistent() const;

 private:
  std::size_t index(VertexId v, Color c) const {
    return static_cast<std::size_t>(v) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c);
  }
  void detach(EdgeId e);
  void attach(EdgeId e, Color c);

  const WeightedGraph* g_;
  int k_;
  std::vector<EdgeId> slot_;
  std::vector<Color> color_;
  std::vector<std::uint32_t> degree_;
  std::vector<Weight> color_weight_;
};

}  // namespace kdjm
