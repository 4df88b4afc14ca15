#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kdjm/color_state.hpp"
#include "kdjm/graph.hpp"

namespace kdjm {

/// k-EC options.
///   cc: try a color free on both endpoints before building a fan
///   lc: among eligible colors pick the one of minimum total weight
///   rl: rotate the whole fan when the chosen color is already free on the center
///   lf: extend fans with unsaturated neighbors first
struct KecFlags {
  bool cc = false;
  bool lc = false;
  bool rl = false;
  bool lf = false;

  static KecFlags defaults() { return KecFlags{true, false, true, false}; }
  static KecFlags none() { return KecFlags{}; }

  /// "CC+RL", "none", "" (= none); order and case of the names are free.
  static KecFlags parse(std::string_view text);
  /// Canonical form, e.g. "CC+RL" or "none".
  std::string to_string() const;

  friend bool operator==(const KecFlags&, const KecFlags&) = default;
};

/// Center u and neighbors w_0 = v, w_1, ..., w_l; edges[i] joins u and w_i.
/// For i >= 1 the color of edges[i] is free on w_{i-1}.
struct Fan {
  VertexId center = kNoVertex;
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
};

std::optional<Color> find_common_free_color(const ColorState& state, VertexId u, VertexId v,
                                            bool lightest = false);

/// Swaps c and d along the maximal path from u whose edges alternate d, c.
/// Requires c free on u; afterwards d is free on u.
void invert_cd_path(ColorState& state, VertexId u, Color c, Color d);

enum class RotateMode { ShortestPrefix, Full };

/// Shifts colors down the fan (edge i takes the color of edge i+1) up to the
/// rotation end, which receives d. ShortestPrefix ends at the first fan
/// vertex on which d is free; Full ends at the last one.
void rotate_fan(ColorState& state, const Fan& fan, Color d, RotateMode mode);

/// Maximal fan around u starting with the uncolored edge to v.
Fan build_fan(const ColorState& state, VertexId u, VertexId v, const KecFlags& flags);

/// One k-EC coloring step for an uncolored edge: common color, fan around u,
/// then fan around v. Returns false (edge stays uncolored) if all fail.
bool try_color_edge(ColorState& state, EdgeId e, const KecFlags& flags);

/// Edges in weight-descending order, each colored with at most k colors or
/// skipped for good.
DisjointMatching k_ec(const WeightedGraph& g, int k, const KecFlags& flags = KecFlags::defaults());
DisjointMatching k_ec(const WeightedGraph& g, const SortedEdgeList& order, int k,
                      const KecFlags& flags = KecFlags::defaults());

}  // namespace kdjm
