#include "kdjm/iterative.hpp"

#include <algorithm>

#include "kdjm/deadline.hpp"

namespace kdjm {

void Matching::add(const WeightedGraph& g, EdgeId e) {
  const Edge& ed = g.edge(e);
  mate[ed.u] = ed.v;
  mate[ed.v] = ed.u;
  edges.push_back(e);
  weight += ed.w;
}

EdgeMask all_available(const WeightedGraph& g) { return EdgeMask(g.num_edges(), 1); }

EdgeMask unassigned_mask(const DisjointMatching& s) {
  EdgeMask mask(s.num_edges(), 0);
  for (EdgeId e = 0; e < s.num_edges(); ++e) mask[e] = s.assigned(e) ? 0 : 1;
  return mask;
}

namespace {

/// Residual edge list shared by the iterative algorithms. Without a class
/// hook, edges taken by a pass are compacted away so later passes only scan
/// what is left. A hook may unassign edges again, in which case every pass
/// rescans the full order and filters by class membership.
class ResidualOrder {
 public:
  ResidualOrder(const SortedEdgeList& order, bool compact)
      : remaining_(order), compact_(compact) {}

  const SortedEdgeList& order() const { return remaining_; }

  void after_pass(const DisjointMatching& s) {
    if (!compact_) return;
    auto& ord = remaining_.order;
    ord.erase(std::remove_if(ord.begin(), ord.end(), [&](EdgeId e) { return s.assigned(e); }),
              ord.end());
  }

 private:
  SortedEdgeList remaining_;
  bool compact_;
};

}  // namespace

Matching greedy_matching_pass(const WeightedGraph& g, const SortedEdgeList& order,
                              EdgeMask& available) {
  Matching m(g.num_vertices());
  for (EdgeId e : order.order) {
    poll_deadline();
    if (!available[e]) continue;
    const Edge& ed = g.edge(e);
    if (m.mate[ed.u] != kNoVertex || m.mate[ed.v] != kNoVertex) continue;
    m.add(g, e);
    available[e] = 0;
  }
  return m;
}

DisjointMatching greedy_it(const WeightedGraph& g, int k, const ClassHook& after_class) {
  return greedy_it(g, sort_edges_desc(g), k, after_class);
}

DisjointMatching greedy_it(const WeightedGraph& g, const SortedEdgeList& order, int k,
                           const ClassHook& after_class) {
  DisjointMatching s(g.num_edges(), k);
  ResidualOrder residual(order, !after_class);
  // used[v] == c  <=>  v is covered by class c.
  std::vector<ClassId> used(g.num_vertices(), kNoClass);
  for (ClassId c = 0; c < k; ++c) {
    for (EdgeId e : residual.order().order) {
      poll_deadline();
      if (s.assigned(e)) continue;
      const Edge& ed = g.edge(e);
      if (used[ed.u] == c || used[ed.v] == c) continue;
      used[ed.u] = used[ed.v] = c;
      s.assign(g, e, c);
    }
    if (after_class) after_class(s, c);
    residual.after_pass(s);
  }
  return s;
}

// --- GPA -----------------------------------------------------------------------

PathsAndCycles gpa_build(const WeightedGraph& g, const SortedEdgeList& order,
                         const EdgeMask& available) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint8_t> sdeg(n, 0);
  std::vector<VertexId> other_end(n);
  std::vector<std::uint32_t> length(n, 0);  // valid at path endpoints
  std::vector<EdgeId> slot(2 * n, kNoEdge);
  for (VertexId v = 0; v < n; ++v) other_end[v] = v;

  auto attach = [&](VertexId x, EdgeId e) { slot[2 * x + sdeg[x]++] = e; };

  for (EdgeId e : order.order) {
    poll_deadline();
    if (!available[e]) continue;
    const auto [u, v, w] = g.edge(e);
    if (sdeg[u] == 2 || sdeg[v] == 2) continue;
    if (other_end[u] == v) {
      // Same path: closing is applicable only for odd length (gives an even cycle).
      if (length[u] % 2 == 1) {
        attach(u, e);
        attach(v, e);
      }
      continue;
    }
    const VertexId a = other_end[u];
    const VertexId b = other_end[v];
    const std::uint32_t len = length[u] + length[v] + 1;
    attach(u, e);
    attach(v, e);
    other_end[a] = b;
    other_end[b] = a;
    length[a] = length[b] = len;
  }

  PathsAndCycles out;
  std::vector<std::uint8_t> visited(n, 0);
  auto walk = [&](VertexId start, bool cycle) {
    PathOrCycle item;
    item.cycle = cycle;
    VertexId cur = start;
    EdgeId prev = kNoEdge;
    visited[start] = 1;
    for (;;) {
      EdgeId next = kNoEdge;
      for (std::uint8_t i = 0; i < sdeg[cur]; ++i) {
        if (slot[2 * cur + i] != prev) {
          next = slot[2 * cur + i];
          break;
        }
      }
      if (next == kNoEdge) break;
      item.edges.push_back(next);
      prev = next;
      cur = g.other(next, cur);
      if (cur == start) break;
      visited[cur] = 1;
    }
    out.items.push_back(std::move(item));
  };
  for (VertexId v = 0; v < n; ++v) {
    if (sdeg[v] == 1 && !visited[v]) walk(v, false);
  }
  for (VertexId v = 0; v < n; ++v) {
    if (sdeg[v] == 2 && !visited[v]) walk(v, true);
  }
  return out;
}

namespace {

void path_dp(std::span<const Weight> w, std::size_t offset, DpSelection& out,
             std::vector<Weight>& best) {
  const std::size_t len = w.size();
  best.assign(len + 1, 0);
  for (std::size_t i = 1; i <= len; ++i) {
    const Weight take = w[i - 1] + (i >= 2 ? best[i - 2] : 0);
    best[i] = std::max(best[i - 1], take);
  }
  out.weight += best[len];
  std::size_t first = out.picked.size();
  for (std::size_t i = len; i > 0;) {
    if (best[i] == best[i - 1]) {
      --i;
    } else {
      out.picked.push_back(offset + i - 1);
      i = i >= 2 ? i - 2 : 0;
    }
  }
  std::reverse(out.picked.begin() + static_cast<std::ptrdiff_t>(first), out.picked.end());
}

}  // namespace

DpSelection dp_optimal_matching(std::span<const Weight> weights, bool cycle) {
  std::vector<Weight> scratch;
  const std::size_t len = weights.size();
  if (!cycle || len < 3) {
    DpSelection sel;
    path_dp(weights, 0, sel, scratch);
    return sel;
  }
  // Cycle: either edge 0 is unmatched (path over 1..len-1), or it is matched
  // and its two neighbours are not (path over 2..len-2).
  DpSelection without_first;
  path_dp(weights.subspan(1), 1, without_first, scratch);

  DpSelection with_first;
  with_first.picked.push_back(0);
  with_first.weight = weights[0];
  if (len >= 4) path_dp(weights.subspan(2, len - 3), 2, with_first, scratch);

  return with_first.weight > without_first.weight ? with_first : without_first;
}

DisjointMatching gpa_it(const WeightedGraph& g, int k, const ClassHook& after_class) {
  return gpa_it(g, sort_edges_desc(g), k, after_class);
}

DisjointMatching gpa_it(const WeightedGraph& g, const SortedEdgeList& order, int k,
                        const ClassHook& after_class) {
  DisjointMatching s(g.num_edges(), k);
  ResidualOrder residual(order, !after_class);
  std::vector<Weight> weights;
  for (ClassId c = 0; c < k; ++c) {
    const EdgeMask available = unassigned_mask(s);
    const PathsAndCycles structures = gpa_build(g, residual.order(), available);
    for (const PathOrCycle& item : structures.items) {
      weights.clear();
      for (EdgeId e : item.edges) weights.push_back(g.weight(e));
      const DpSelection sel = dp_optimal_matching(weights, item.cycle);
      for (std::size_t pos : sel.picked) s.assign(g, item.edges[pos], c);
    }
    if (after_class) after_class(s, c);
    residual.after_pass(s);
  }
  return s;
}

}  // namespace kdjm
