#include "kdjm/coloring.hpp"

#include <algorithm>
#include <stdexcept>

#include "kdjm/deadline.hpp"
#include "kdjm/iterative.hpp"
#include "kdjm/kec.hpp"

namespace kdjm {

BMatching greedy_b_matching(const WeightedGraph& g, const SortedEdgeList& order, std::uint32_t b) {
  if (b < 1) throw std::invalid_argument("b must be at least 1");
  BMatching bm;
  bm.b = b;
  bm.saturation.assign(g.num_vertices(), 0);
  for (EdgeId e : order.order) {
    poll_deadline();
    const Edge& ed = g.edge(e);
    if (bm.saturation[ed.u] >= b || bm.saturation[ed.v] >= b) continue;
    ++bm.saturation[ed.u];
    ++bm.saturation[ed.v];
    bm.edges.push_back(e);
    bm.weight += ed.w;
  }
  return bm;
}

BMatching greedy_b_matching(const WeightedGraph& g, std::uint32_t b) {
  return greedy_b_matching(g, sort_edges_desc(g), b);
}

EdgeColoring misra_gries_color(const WeightedGraph& g, std::span<const EdgeId> subgraph_edges) {
  EdgeColoring out;
  out.color.assign(g.num_edges(), kNoColor);
  if (subgraph_edges.empty()) return out;
  std::vector<std::uint32_t> deg(g.num_vertices(), 0);
  std::uint32_t delta = 0;
  for (EdgeId e : subgraph_edges) {
    delta = std::max({delta, ++deg[g.edge(e).u], ++deg[g.edge(e).v]});
  }
  ColorState state(g, static_cast<int>(delta) + 1);
  for (EdgeId e : subgraph_edges) {
    poll_deadline();
    if (!try_color_edge(state, e, KecFlags::none())) {
      throw std::logic_error("edge coloring failed with max-degree + 1 colors");
    }
  }
  std::vector<std::uint8_t> used(delta + 1, 0);
  for (EdgeId e : subgraph_edges) {
    out.color[e] = state.color_of(e);
    used[static_cast<std::size_t>(out.color[e])] = 1;
  }
  out.num_colors = static_cast<int>(std::count(used.begin(), used.end(), 1));
  return out;
}

DisjointMatching b_greedy_and_extend(const WeightedGraph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (k == 1) return greedy_it(g, 1);
  const SortedEdgeList order = sort_edges_desc(g);
  const BMatching bm = greedy_b_matching(g, order, static_cast<std::uint32_t>(k - 1));
  const EdgeColoring coloring = misra_gries_color(g, bm.edges);

  // Colors are compacted in first-use order so classes are 0..k-1.
  DisjointMatching s(g.num_edges(), k);
  std::vector<Color> remap(static_cast<std::size_t>(k), kNoColor);
  Color next = 0;
  for (EdgeId e : bm.edges) {
    Color& slot = remap[static_cast<std::size_t>(coloring.color[e])];
    if (slot == kNoColor) slot = next++;
    s.assign(g, e, slot);
  }

  std::vector<std::uint8_t> busy(g.num_vertices(), 0);
  for (ClassId c = 0; c < k; ++c) {
    std::fill(busy.begin(), busy.end(), 0);
    for (EdgeId e : s.class_edges(c)) {
      busy[g.edge(e).u] = 1;
      busy[g.edge(e).v] = 1;
    }
    for (EdgeId e : order.order) {
      poll_deadline();
      if (s.assigned(e)) continue;
      const Edge& ed = g.edge(e);
      if (busy[ed.u] || busy[ed.v]) continue;
      busy[ed.u] = busy[ed.v] = 1;
      s.assign(g, e, c);
    }
  }
  return s;
}

}  // namespace kdjm
