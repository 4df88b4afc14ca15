#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "kdjm/blossom.hpp"
#include "kdjm/graph.hpp"
#include "kdjm/kec.hpp"
#include "kdjm/node_centered.hpp"
#include "kdjm/postprocess.hpp"

namespace kdjm {

enum class AlgorithmKind { GreedyIt, GpaIt, BlossomIt, BGreedyExtend, NodeCentered, KEc };

/// greedy_it, gpa_it, blossom_it, bgreedy_extend, node_centered, k_ec.
std::string to_string(AlgorithmKind kind);
AlgorithmKind parse_algorithm_kind(std::string_view name);

/// An algorithm with its options, written as "name[:key=value,...]".
/// Keys: post (none|local|global|roma), roma_rounds, seed, and per
/// algorithm rating + theta (node_centered), flags (k_ec), start (blossom_it).
struct AlgorithmConfig {
  AlgorithmKind kind = AlgorithmKind::GreedyIt;
  PostprocessConfig post;
  /// ROMA seed from the config text; when absent the runner supplies one.
  std::optional<std::uint64_t> seed;
  RatingFn rating = RatingFn::KSum;
  Theta theta;
  KecFlags flags = KecFlags::defaults();
  BlossomStart start = BlossomStart::Fractional;

  static AlgorithmConfig parse(std::string_view text);

  std::string name() const { return kdjm::to_string(kind); }
  /// Canonical option string without the name, e.g. "rating=ksum,theta=1/5".
  std::string options() const;
  /// name() plus ":" + options() when there are any.
  std::string to_string() const;

  /// Same input, same output. Only ROMA draws random numbers.
  bool deterministic() const { return post.strategy != Strategy::Roma; }
};

/// Runs the configured algorithm, postprocessing included. `seed` is used
/// for ROMA unless the config fixes one.
DisjointMatching run_algorithm(const WeightedGraph& g, int k, const AlgorithmConfig& config,
                               std::uint64_t seed = 0);

}  // namespace kdjm
