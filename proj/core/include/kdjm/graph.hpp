#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace kdjm {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
/// Demand in abstract units. Every stored edge carries a strictly positive demand.
using Weight = std::uint64_t;
/// Index of one of the k disjoint matchings (a "color"); kNoClass when unassigned.
using ClassId = std::int32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();
inline constexpr ClassId kNoClass = -1;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Weight w = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

enum class GraphErrorKind { SelfLoop, DuplicateEdge, ZeroWeight, EndpointOutOfRange };

class GraphError : public std::invalid_argument {
 public:
  GraphError(GraphErrorKind kind, Edge triple, const std::string& what)
      : std::invalid_argument(what), kind_(kind), triple_(triple) {}

  GraphErrorKind kind() const noexcept { return kind_; }
  const Edge& triple() const noexcept { return triple_; }

 private:
  GraphErrorKind kind_;
  Edge triple_;
};

/// Immutable simple undirected graph with positive integer demands.
///
/// Edges are stored canonically (u < v) and sorted by (u, v), so edge ids
/// follow lexicographic endpoint order. Adjacency lists are sorted by
/// neighbor id.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  /// Throws GraphError naming the offending triple on self-loops, duplicate
  /// pairs, zero demands or endpoints >= n.
  static WeightedGraph build(std::size_t n, std::span<const Edge> triples);

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  Weight weight(EdgeId e) const { return edges_[e].w; }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const Incidence> incident(VertexId v) const {
    return {incidence_.data() + offsets_[v], incidence_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

  VertexId other(EdgeId e, VertexId v) const {
    const Edge& ed = edges_[e];
    return ed.u == v ? ed.v : ed.u;
  }

  /// Edge id of {u, v}, or kNoEdge. O(log deg(u)).
  EdgeId find_edge(VertexId u, VertexId v) const;

  std::size_t max_degree() const noexcept { return max_degree_; }
  Weight max_demand() const noexcept { return max_demand_; }
  Weight total_demand() const noexcept { return total_demand_; }

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Incidence> incidence_;
  std::size_t max_degree_ = 0;
  Weight max_demand_ = 0;
  Weight total_demand_ = 0;
};

inline WeightedGraph build_graph(std::size_t n, std::span<const Edge> triples) {
  return WeightedGraph::build(n, triples);
}

/// Demand-descending edge order; equal demands ordered by ascending (u, v).
struct SortedEdgeList {
  std::vector<EdgeId> order;

  std::size_t size() const noexcept { return order.size(); }
  /// rank[e] = position of e in order.
  std::vector<std::uint32_t> ranks() const;
};

SortedEdgeList sort_edges_desc(const WeightedGraph& g);

/// k pairwise edge-disjoint matchings ("classes") over the edges of a graph.
///
/// Mutators keep the bookkeeping consistent (class_of, class lists and
/// weights) but do not check the matching property; validate_solution does.
class DisjointMatching {
 public:
  DisjointMatching() = default;
  DisjointMatching(std::size_t num_edges, int k);

  /// Unchecked construction from raw class lists, e.g. for validation tests.
  /// Weights are recomputed from the graph.
  static DisjointMatching from_classes(const WeightedGraph& g,
                                       std::vector<std::vector<EdgeId>> classes);
  /// Fully raw: stored weights are taken as given.
  static DisjointMatching from_parts(std::size_t num_edges,
                                     std::vector<std::vector<EdgeId>> classes,
                                     std::vector<Weight> class_weights,
                                     Weight total_weight);

  int k() const noexcept { return static_cast<int>(classes_.size()); }
  std::size_t num_edges() const noexcept { return class_of_.size(); }

  ClassId class_of(EdgeId e) const { return class_of_[e]; }
  bool assigned(EdgeId e) const { return class_of_[e] != kNoClass; }

  std::span<const EdgeId> class_edges(ClassId c) const { return classes_[c]; }
  Weight class_weight(ClassId c) const { return class_weights_[c]; }
  std::span<const Weight> class_weights() const noexcept { return class_weights_; }
  Weight total_weight() const noexcept { return total_weight_; }
  std::size_t size() const noexcept;

  void assign(const WeightedGraph& g, EdgeId e, ClassId c);
  void unassign(const WeightedGraph& g, EdgeId e);

  /// Copy of the class lists with each list sorted by edge id.
  std::vector<std::vector<EdgeId>> sorted_classes() const;

 private:
  std::vector<ClassId> class_of_;
  std::vector<std::uint32_t> slot_;
  std::vector<std::vector<EdgeId>> classes_;
  std::vector<Weight> class_weights_;
  Weight total_weight_ = 0;
};

/// Callback invoked by constructive algorithms when class c is complete.
using ClassHook = std::function<void(DisjointMatching&, ClassId)>;

enum class Violation {
  None,
  ClassCount,
  EdgeOutOfRange,
  SharedEndpoint,
  DuplicateAssignment,
  ClassOfMismatch,
  WeightMismatch,
};

std::string to_string(Violation v);

struct ValidationReport {
  Violation kind = Violation::None;
  ClassId cls = kNoClass;
  EdgeId first = kNoEdge;
  EdgeId second = kNoEdge;
  VertexId vertex = kNoVertex;
  std::string message;

  bool ok() const noexcept { return kind == Violation::None; }
  explicit operator bool() const noexcept { return ok(); }
};

/// Reports the first violated invariant of s with respect to g.
ValidationReport validate_solution(const WeightedGraph& g, const DisjointMatching& s);

inline Weight solution_weight(const DisjointMatching& s) { return s.total_weight(); }

}  // namespace kdjm
