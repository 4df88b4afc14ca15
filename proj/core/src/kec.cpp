#include "kdjm/kec.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "kdjm/deadline.hpp"

namespace kdjm {

KecFlags KecFlags::parse(std::string_view text) {
  KecFlags f;
  std::string lower;
  for (char ch : text) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  if (lower.empty() || lower == "none") return f;
  std::size_t pos = 0;
  while (pos <= lower.size()) {
    const std::size_t end = std::min(lower.find('+', pos), lower.size());
    const std::string_view tok = std::string_view(lower).substr(pos, end - pos);
    if (tok == "cc") {
      f.cc = true;
    } else if (tok == "lc") {
      f.lc = true;
    } else if (tok == "rl") {
      f.rl = true;
    } else if (tok == "lf") {
      f.lf = true;
    } else {
      throw std::invalid_argument("unknown k-EC flag '" + std::string(tok) + "'");
    }
    pos = end + 1;
  }
  return f;
}

std::string KecFlags::to_string() const {
  std::string out;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += '+';
    out += name;
  };
  add(cc, "CC");
  add(lc, "LC");
  add(rl, "RL");
  add(lf, "LF");
  return out.empty() ? "none" : out;
}

std::optional<Color> find_common_free_color(const ColorState& state, VertexId u, VertexId v,
                                            bool lightest) {
  if (state.saturated(u) || state.saturated(v)) return std::nullopt;
  Color best = kNoColor;
  for (Color c = 0; c < state.k(); ++c) {
    if (!state.is_free(u, c) || !state.is_free(v, c)) continue;
    if (!lightest) return c;
    if (best == kNoColor || state.color_weight(c) < state.color_weight(best)) best = c;
  }
  if (best == kNoColor) return std::nullopt;
  return best;
}

void invert_cd_path(ColorState& state, VertexId u, Color c, Color d) {
  if (!state.is_free(u, c)) throw std::logic_error("c must be free on the path start");
  const WeightedGraph& g = state.graph();
  std::vector<EdgeId> path;
  std::vector<Color> swapped;
  VertexId x = u;
  Color want = d;
  for (;;) {
    const EdgeId e = state.edge_with(x, want);
    if (e == kNoEdge) break;
    path.push_back(e);
    swapped.push_back(want == d ? c : d);
    x = g.other(e, x);
    want = want == d ? c : d;
  }
  state.recolor(path, swapped);
}

void rotate_fan(ColorState& state, const Fan& fan, Color d, RotateMode mode) {
  const std::size_t len = fan.vertices.size();
  std::size_t end = len - 1;
  if (mode == RotateMode::ShortestPrefix) {
    end = 0;
    while (end < len && !state.is_free(fan.vertices[end], d)) ++end;
    if (end == len) throw std::logic_error("d is not free on any fan vertex");
  }
  if (!state.is_free(fan.center, d) || !state.is_free(fan.vertices[end], d)) {
    throw std::logic_error("rotation color must be free on both ends");
  }
  std::vector<EdgeId> edges(fan.edges.begin(), fan.edges.begin() + static_cast<std::ptrdiff_t>(end + 1));
  std::vector<Color> colors(end + 1);
  for (std::size_t i = 0; i < end; ++i) colors[i] = state.color_of(fan.edges[i + 1]);
  colors[end] = d;
  state.recolor(edges, colors);
}

namespace {

/// Per-run scratch for fan membership.
struct FanMarks {
  std::vector<std::uint32_t> stamp;
  std::uint32_t current = 0;

  void next(std::size_t n) {
    if (stamp.size() != n) stamp.assign(n, 0);
    if (++current == 0) {
      std::fill(stamp.begin(), stamp.end(), 0);
      current = 1;
    }
  }
};

Fan build_fan_impl(const ColorState& state, VertexId u, VertexId v, const KecFlags& flags,
                   FanMarks& marks) {
  const WeightedGraph& g = state.graph();
  marks.next(g.num_vertices());
  Fan fan;
  fan.center = u;
  fan.vertices.push_back(v);
  fan.edges.push_back(g.find_edge(u, v));
  marks.stamp[v] = marks.current;
  for (;;) {
    const VertexId last = fan.vertices.back();
    VertexId pick = kNoVertex;
    EdgeId pick_edge = kNoEdge;
    for (Color c = 0; c < state.k(); ++c) {
      if (!state.is_free(last, c)) continue;
      const EdgeId e = state.edge_with(u, c);
      if (e == kNoEdge) continue;
      const VertexId x = g.other(e, u);
      if (marks.stamp[x] == marks.current) continue;
      if (pick == kNoVertex) {
        pick = x;
        pick_edge = e;
        if (!flags.lf || !state.saturated(x)) break;
      } else if (!state.saturated(x)) {
        pick = x;
        pick_edge = e;
        break;
      }
    }
    if (pick == kNoVertex) break;
    fan.vertices.push_back(pick);
    fan.edges.push_back(pick_edge);
    marks.stamp[pick] = marks.current;
  }
  return fan;
}

bool attempt(ColorState& state, VertexId u, VertexId v, const KecFlags& flags, FanMarks& marks) {
  const Fan fan = build_fan_impl(state, u, v, flags, marks);
  const Color d = state.free_color(fan.vertices.back(), flags.lc);
  if (d == kNoColor) return false;
  const Color c = state.free_color(u, flags.lc);
  if (c == kNoColor) return false;
  const bool d_free_on_u = state.is_free(u, d);
  if (!d_free_on_u) invert_cd_path(state, u, c, d);
  rotate_fan(state, fan, d, flags.rl && d_free_on_u ? RotateMode::Full : RotateMode::ShortestPrefix);
  return true;
}

bool color_edge(ColorState& state, EdgeId e, const KecFlags& flags, FanMarks& marks) {
  const Edge& ed = state.graph().edge(e);
  if (state.saturated(ed.u) || state.saturated(ed.v)) return false;
  if (flags.cc) {
    if (auto c = find_common_free_color(state, ed.u, ed.v, flags.lc)) {
      state.set_color(e, *c);
      return true;
    }
  }
  if (attempt(state, ed.u, ed.v, flags, marks)) return true;
  return attempt(state, ed.v, ed.u, flags, marks);
}

}  // namespace

Fan build_fan(const ColorState& state, VertexId u, VertexId v, const KecFlags& flags) {
  FanMarks marks;
  return build_fan_impl(state, u, v, flags, marks);
}

bool try_color_edge(ColorState& state, EdgeId e, const KecFlags& flags) {
  FanMarks marks;
  return color_edge(state, e, flags, marks);
}

DisjointMatching k_ec(const WeightedGraph& g, int k, const KecFlags& flags) {
  return k_ec(g, sort_edges_desc(g), k, flags);
}

DisjointMatching k_ec(const WeightedGraph& g, const SortedEdgeList& order, int k,
                      const KecFlags& flags) {
  ColorState state(g, k);
  FanMarks marks;
  for (EdgeId e : order.order) {
    poll_deadline();
    color_edge(state, e, flags, marks);
  }
  return state.to_solution();
}

}  // namespace kdjm
