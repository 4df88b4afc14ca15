#include "kdjm/color_state.hpp"

#include <stdexcept>

namespace kdjm {

ColorState::ColorState(const WeightedGraph& g, int k)
    : g_(&g),
      k_(k),
      color_(g.num_edges(), kNoColor),
      degree_(g.num_vertices(), 0),
      color_weight_(static_cast<std::size_t>(std::max(k, 0)), 0) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  slot_.assign(g.num_vertices() * static_cast<std::size_t>(k), kNoEdge);
}

Color ColorState::free_color(VertexId v, bool lightest) const {
  if (saturated(v)) return kNoColor;
  Color best = kNoColor;
  for (Color c = 0; c < k_; ++c) {
    if (!is_free(v, c)) continue;
    if (!lightest) return c;
    if (best == kNoColor || color_weight(c) < color_weight(best)) best = c;
  }
  return best;
}

void ColorState::attach(EdgeId e, Color c) {
  const Edge& ed = g_->edge(e);
  slot_[index(ed.u, c)] = e;
  slot_[index(ed.v, c)] = e;
  ++degree_[ed.u];
  ++degree_[ed.v];
  color_[e] = c;
  color_weight_[static_cast<std::size_t>(c)] += ed.w;
}

void ColorState::detach(EdgeId e) {
  const Edge& ed = g_->edge(e);
  const Color c = color_[e];
  if (slot_[index(ed.u, c)] == e) slot_[index(ed.u, c)] = kNoEdge;
  if (slot_[index(ed.v, c)] == e) slot_[index(ed.v, c)] = kNoEdge;
  --degree_[ed.u];
  --degree_[ed.v];
  color_[e] = kNoColor;
  color_weight_[static_cast<std::size_t>(c)] -= ed.w;
}

void ColorState::set_color(EdgeId e, Color c) {
  const Edge& ed = g_->edge(e);
  if (colored(e)) throw std::logic_error("edge already colored");
  if (!is_free(ed.u, c) || !is_free(ed.v, c)) throw std::logic_error("color not free");
  attach(e, c);
}

void ColorState::recolor(std::span<const EdgeId> edges, std::span<const Color> colors) {
  for (EdgeId e : edges) {
    if (colored(e)) detach(e);
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& ed = g_->edge(edges[i]);
    if (!is_free(ed.u, colors[i]) || !is_free(ed.v, colors[i])) {
      throw std::logic_error("recoloring would break properness");
    }
    attach(edges[i], colors[i]);
  }
}

DisjointMatching ColorState::to_solution() const {
  DisjointMatching s(g_->num_edges(), k_);
  for (EdgeId e = 0; e < g_->num_edges(); ++e) {
    if (colored(e)) s.assign(*g_, e, color_[e]);
  }
  return s;
}

bool ColorState::consistent() const {
  std::vector<std::uint32_t> deg(g_->num_vertices(), 0);
  std::vector<Weight> cw(static_cast<std::size_t>(k_), 0);
  std::size_t filled = 0;
  for (EdgeId e = 0; e < g_->num_edges(); ++e) {
    const Color c = color_[e];
    if (c == kNoColor) continue;
    if (c < 0 || c >= k_) return false;
    const Edge& ed = g_->edge(e);
    if (slot_[index(ed.u, c)] != e || slot_[index(ed.v, c)] != e) return false;
    ++deg[ed.u];
    ++deg[ed.v];
    cw[static_cast<std::size_t>(c)] += ed.w;
    filled += 2;
  }
  std::size_t occupied = 0;
  for (EdgeId e : slot_) occupied += e != kNoEdge;
  return occupied == filled && deg == degree_ && cw == color_weight_;
}

}  // namespace kdjm
