#include "kdjm/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kdjm {

namespace {

std::string describe(const Edge& t) {
  std::ostringstream os;
  os << "(" << t.u << ", " << t.v << ", " << t.w << ")";
  return os.str();
}

}  // namespace

WeightedGraph WeightedGraph::build(std::size_t n, std::span<const Edge> triples) {
  if (n > std::numeric_limits<VertexId>::max()) {
    throw std::length_error("vertex count exceeds 32-bit id range");
  }
  if (triples.size() >= std::numeric_limits<EdgeId>::max()) {
    throw std::length_error("edge count exceeds 32-bit id range");
  }

  WeightedGraph g;
  g.n_ = n;
  g.edges_.reserve(triples.size());
  for (const Edge& t : triples) {
    if (t.u >= n || t.v >= n) {
      throw GraphError(GraphErrorKind::EndpointOutOfRange, t,
                       "endpoint out of range in " + describe(t));
    }
    if (t.u == t.v) {
      throw GraphError(GraphErrorKind::SelfLoop, t, "self-loop " + describe(t));
    }
    if (t.w == 0) {
      throw GraphError(GraphErrorKind::ZeroWeight, t, "zero demand " + describe(t));
    }
    g.edges_.push_back(t.u < t.v ? t : Edge{t.v, t.u, t.w});
  }

  // Sort input positions so a duplicate can be reported as the later triple.
  std::vector<std::size_t> idx(g.edges_.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const Edge& x = g.edges_[a];
    const Edge& y = g.edges_[b];
    return std::tie(x.u, x.v) < std::tie(y.u, y.v);
  });
  for (std::size_t i = 1; i < idx.size(); ++i) {
    const Edge& prev = g.edges_[idx[i - 1]];
    const Edge& cur = g.edges_[idx[i]];
    if (prev.u == cur.u && prev.v == cur.v) {
      const std::size_t later = std::max(idx[i - 1], idx[i]);
      throw GraphError(GraphErrorKind::DuplicateEdge, triples[later],
                       "duplicate edge " + describe(triples[later]));
    }
  }
  std::vector<Edge> sorted;
  sorted.reserve(idx.size());
  for (std::size_t i : idx) sorted.push_back(g.edges_[i]);
  g.edges_ = std::move(sorted);

  std::vector<std::size_t> deg(n, 0);
  for (const Edge& e : g.edges_) {
    ++deg[e.u];
    ++deg[e.v];
    g.max_demand_ = std::max(g.max_demand_, e.w);
    g.total_demand_ += e.w;
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.max_degree_ = std::max(g.max_degree_, deg[v]);
  }
  g.incidence_.resize(2 * g.edges_.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted by (u, v); filling in edge order yields neighbor-sorted
  // lists for the u side. The v side needs an explicit sort.
  for (EdgeId e = 0; e < g.edges_.size(); ++e) {
    const Edge& ed = g.edges_[e];
    g.incidence_[fill[ed.u]++] = {ed.v, e};
    g.incidence_[fill[ed.v]++] = {ed.u, e};
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(g.incidence_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.incidence_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]),
              [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
  }
  return g;
}

EdgeId WeightedGraph::find_edge(VertexId u, VertexId v) const {
  if (u >= n_ || v >= n_) return kNoEdge;
  auto inc = incident(u);
  auto it = std::lower_bound(inc.begin(), inc.end(), v,
                             [](const Incidence& a, VertexId x) { return a.neighbor < x; });
  return (it != inc.end() && it->neighbor == v) ? it->edge : kNoEdge;
}

std::vector<std::uint32_t> SortedEdgeList::ranks() const {
  std::vector<std::uint32_t> rank(order.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
  return rank;
}

SortedEdgeList sort_edges_desc(const WeightedGraph& g) {
  SortedEdgeList list;
  list.order.resize(g.num_edges());
  std::iota(list.order.begin(), list.order.end(), EdgeId{0});
  // Edge ids are already in (u, v) order, so the id is the tie-breaker.
  std::sort(list.order.begin(), list.order.end(), [&](EdgeId a, EdgeId b) {
    const Weight wa = g.weight(a);
    const Weight wb = g.weight(b);
    return wa != wb ? wa > wb : a < b;
  });
  return list;
}

// --- DisjointMatching ------------------------------------------------------

DisjointMatching::DisjointMatching(std::size_t num_edges, int k)
    : class_of_(num_edges, kNoClass),
      slot_(num_edges, 0),
      classes_(static_cast<std::size_t>(std::max(k, 0))),
      class_weights_(static_cast<std::size_t>(std::max(k, 0)), 0) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
}

DisjointMatching DisjointMatching::from_classes(const WeightedGraph& g,
                                                std::vector<std::vector<EdgeId>> classes) {
  std::vector<Weight> weights(classes.size(), 0);
  Weight total = 0;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (EdgeId e : classes[c]) {
      if (e < g.num_edges()) weights[c] += g.weight(e);
    }
    total += weights[c];
  }
  return from_parts(g.num_edges(), std::move(classes), std::move(weights), total);
}

DisjointMatching DisjointMatching::from_parts(std::size_t num_edges,
                                              std::vector<std::vector<EdgeId>> classes,
                                              std::vector<Weight> class_weights,
                                              Weight total_weight) {
  DisjointMatching s;
  s.class_of_.assign(num_edges, kNoClass);
  s.slot_.assign(num_edges, 0);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (std::uint32_t i = 0; i < classes[c].size(); ++i) {
      const EdgeId e = classes[c][i];
      if (e < num_edges) {
        s.class_of_[e] = static_cast<ClassId>(c);
        s.slot_[e] = i;
      }
    }
  }
  s.classes_ = std::move(classes);
  s.class_weights_ = std::move(class_weights);
  s.class_weights_.resize(s.classes_.size(), 0);
  s.total_weight_ = total_weight;
  return s;
}

std::size_t DisjointMatching::size() const noexcept {
  std::size_t total = 0;
  for (const auto& c : classes_) total += c.size();
  return total;
}

void DisjointMatching::assign(const WeightedGraph& g, EdgeId e, ClassId c) {
  if (class_of_[e] != kNoClass) throw std::logic_error("edge already assigned");
  auto& list = classes_[static_cast<std::size_t>(c)];
  class_of_[e] = c;
  slot_[e] = static_cast<std::uint32_t>(list.size());
  list.push_back(e);
  class_weights_[static_cast<std::size_t>(c)] += g.weight(e);
  total_weight_ += g.weight(e);
}

void DisjointMatching::unassign(const WeightedGraph& g, EdgeId e) {
  const ClassId c = class_of_[e];
  if (c == kNoClass) throw std::logic_error("edge not assigned");
  auto& list = classes_[static_cast<std::size_t>(c)];
  const std::uint32_t pos = slot_[e];
  list[pos] = list.back();
  slot_[list[pos]] = pos;
  list.pop_back();
  class_of_[e] = kNoClass;
  class_weights_[static_cast<std::size_t>(c)] -= g.weight(e);
  total_weight_ -= g.weight(e);
}

std::vector<std::vector<EdgeId>> DisjointMatching::sorted_classes() const {
  auto out = classes_;
  for (auto& c : out) std::sort(c.begin(), c.end());
  return out;
}

// --- validation --------------------------------------------------------------

std::string to_string(Violation v) {
  switch (v) {
    case Violation::None: return "none";
    case Violation::ClassCount: return "class-count";
    case Violation::EdgeOutOfRange: return "edge-out-of-range";
    case Violation::SharedEndpoint: return "shared-endpoint";
    case Violation::DuplicateAssignment: return "duplicate-assignment";
    case Violation::ClassOfMismatch: return "class-of-mismatch";
    case Violation::WeightMismatch: return "weight-mismatch";
  }
  return "unknown";
}

ValidationReport validate_solution(const WeightedGraph& g, const DisjointMatching& s) {
  ValidationReport r;
  auto fail = [&](Violation kind, std::string msg) {
    r.kind = kind;
    r.message = std::move(msg);
    return r;
  };

  if (s.k() < 1) return fail(Violation::ClassCount, "solution has no classes");
  if (s.num_edges() != g.num_edges()) {
    return fail(Violation::EdgeOutOfRange, "solution sized for a different edge count");
  }

  const std::size_t m = g.num_edges();
  std::vector<ClassId> seen(m, kNoClass);
  std::vector<EdgeId> at(g.num_vertices(), kNoEdge);
  Weight total = 0;

  for (ClassId c = 0; c < s.k(); ++c) {
    for (EdgeId e : s.class_edges(c)) {
      r.cls = c;
      r.first = e;
      if (e >= m) return fail(Violation::EdgeOutOfRange, "edge id out of range");
      if (seen[e] != kNoClass) {
        r.second = e;
        return fail(Violation::DuplicateAssignment,
                    "edge " + std::to_string(e) + " listed in classes " +
                        std::to_string(seen[e]) + " and " + std::to_string(c));
      }
      seen[e] = c;
    }
  }

  for (ClassId c = 0; c < s.k(); ++c) {
    Weight class_total = 0;
    for (EdgeId e : s.class_edges(c)) {
      r.cls = c;
      r.first = e;
      if (s.class_of(e) != c) {
        return fail(Violation::ClassOfMismatch,
                    "class_of disagrees with class list for edge " + std::to_string(e));
      }
      for (VertexId x : {g.edge(e).u, g.edge(e).v}) {
        if (at[x] != kNoEdge) {
          r.second = at[x];
          r.vertex = x;
          return fail(Violation::SharedEndpoint,
                      "class " + std::to_string(c) + " has edges " + std::to_string(at[x]) +
                          " and " + std::to_string(e) + " sharing vertex " + std::to_string(x));
        }
        at[x] = e;
      }
      class_total += g.weight(e);
    }
    for (EdgeId e : s.class_edges(c)) {
      at[g.edge(e).u] = kNoEdge;
      at[g.edge(e).v] = kNoEdge;
    }
    if (class_total != s.class_weight(c)) {
      r.cls = c;
      r.first = r.second = kNoEdge;
      return fail(Violation::WeightMismatch, "class " + std::to_string(c) + " weight " +
                                                 std::to_string(s.class_weight(c)) +
                                                 " but edges sum to " +
                                                 std::to_string(class_total));
    }
    total += class_total;
  }
  for (EdgeId e = 0; e < m; ++e) {
    if (s.class_of(e) != kNoClass && seen[e] == kNoClass) {
      r.first = e;
      r.cls = s.class_of(e);
      return fail(Violation::ClassOfMismatch,
                  "edge " + std::to_string(e) + " marked assigned but not listed");
    }
  }
  if (total != s.total_weight()) {
    r.cls = kNoClass;
    r.first = kNoEdge;
    return fail(Violation::WeightMismatch, "total weight " + std::to_string(s.total_weight()) +
                                               " but classes sum to " + std::to_string(total));
  }
  return ValidationReport{};
}

}  // namespace kdjm
