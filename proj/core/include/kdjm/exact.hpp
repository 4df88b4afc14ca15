#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "kdjm/graph.hpp"

namespace kdjm {

struct ExactLimits {
  std::size_t max_edges = 24;
  int max_k = 4;
};

class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExactResult {
  Weight weight = 0;
  DisjointMatching solution;
  std::uint64_t explored = 0;  ///< search nodes visited
};

/// Optimal k-disjoint matching by branch and bound over per-edge class
/// choices. Throws LimitExceeded when the instance is over the limits.
ExactResult brute_force_kdjm(const WeightedGraph& g, int k, const ExactLimits& limits = {});

/// Writes the assignment-formulation integer program in CPLEX LP format.
void export_ilp(const WeightedGraph& g, int k, std::ostream& out);
/// Same, to a file; throws IoError on failure.
void export_ilp(const WeightedGraph& g, int k, const std::filesystem::path& path);
std::string export_ilp_string(const WeightedGraph& g, int k);

}  // namespace kdjm
