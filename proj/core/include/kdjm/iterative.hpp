#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kdjm/graph.hpp"

namespace kdjm {

/// A single matching: member edges, per-vertex mate (kNoVertex if free) and weight.
struct Matching {
  std::vector<EdgeId> edges;
  std::vector<VertexId> mate;
  Weight weight = 0;

  explicit Matching(std::size_t n = 0) : mate(n, kNoVertex) {}
  void add(const WeightedGraph& g, EdgeId e);
};

/// Per-edge availability: nonzero means the edge may still be used.
using EdgeMask = std::vector<std::uint8_t>;

EdgeMask all_available(const WeightedGraph& g);
/// Edges not assigned to any class of s.
EdgeMask unassigned_mask(const DisjointMatching& s);

// --- Greedy-It -----------------------------------------------------------------

/// One greedy pass over `order`: takes every available edge whose endpoints
/// are still free. Selected edges are cleared in `available`.
Matching greedy_matching_pass(const WeightedGraph& g, const SortedEdgeList& order,
                              EdgeMask& available);

/// k greedy passes over one sorted edge list; class i is the i-th pass.
/// `after_class` runs when a class is complete and may modify the solution
/// (postprocessing); later passes respect its changes.
DisjointMatching greedy_it(const WeightedGraph& g, int k, const ClassHook& after_class = {});
DisjointMatching greedy_it(const WeightedGraph& g, const SortedEdgeList& order, int k,
                           const ClassHook& after_class = {});

// --- GPA-It --------------------------------------------------------------------

/// A path or an even-length cycle grown by the global paths algorithm.
/// For paths, edges are listed from one end to the other; for cycles, in
/// traversal order (edges[i] and edges[i+1] adjacent, last wraps to first).
struct PathOrCycle {
  bool cycle = false;
  std::vector<EdgeId> edges;
};

struct PathsAndCycles {
  std::vector<PathOrCycle> items;
};

/// Scans available edges in `order` and keeps each applicable one: an edge
/// joining two different paths, or closing an odd-length path into an even
/// cycle.
PathsAndCycles gpa_build(const WeightedGraph& g, const SortedEdgeList& order,
                         const EdgeMask& available);

struct DpSelection {
  std::vector<std::size_t> picked;  ///< positions into the weight sequence, ascending
  Weight weight = 0;
};

/// Maximum-weight matching of a path (consecutive weights share a vertex)
/// or of a cycle (additionally first and last share a vertex). Linear time.
DpSelection dp_optimal_matching(std::span<const Weight> weights, bool cycle);

/// k rounds of path growing plus dynamic programming on the residual graph.
DisjointMatching gpa_it(const WeightedGraph& g, int k, const ClassHook& after_class = {});
DisjointMatching gpa_it(const WeightedGraph& g, const SortedEdgeList& order, int k,
                        const ClassHook& after_class = {});

}  // namespace kdjm
