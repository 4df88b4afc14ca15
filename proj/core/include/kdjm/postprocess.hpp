#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kdjm/graph.hpp"

namespace kdjm {

/// Replace matched edge u-v of one class by u-r and v-s.
struct SwapCandidate {
  EdgeId matched = kNoEdge;
  EdgeId left = kNoEdge;   ///< u-r
  EdgeId right = kNoEdge;  ///< v-s
  Weight gain = 0;         ///< w(u,r) + w(v,s) - w(u,v), always positive
};

/// Best positive-gain 2-augmentation of edge e in class c, applied to s.
/// Replacement edges must be unused by every class and their far endpoints
/// distinct and free in class c. Returns the applied candidate.
std::optional<SwapCandidate> max_gain_two_augmentation(const WeightedGraph& g, DisjointMatching& s,
                                                       ClassId c, EdgeId e);

/// One pass over the edges class c had on entry, heaviest first.
/// Returns the number of applied augmentations.
std::size_t swaps(const WeightedGraph& g, DisjointMatching& s, ClassId c);

/// Up to `rounds` sweeps over all vertices in a seeded random order,
/// augmenting the class edge at each vertex; stops after a sweep without
/// change. Returns the number of sweeps performed.
std::size_t roma(const WeightedGraph& g, DisjointMatching& s, ClassId c, int rounds,
                 std::uint64_t seed);

enum class Strategy { None, LocalSwaps, GlobalSwaps, Roma };

std::string to_string(Strategy s);
/// none, local, global, roma (also localswaps / globalswaps).
Strategy parse_strategy(std::string_view text);

struct PostprocessConfig {
  Strategy strategy = Strategy::None;
  int roma_rounds = 4;
  std::uint64_t seed = 0;
};

/// Runs a strategy at the points an iterative algorithm exposes:
/// LocalSwaps and ROMA after each class, GlobalSwaps once at the end.
class Postprocessor {
 public:
  Postprocessor(const WeightedGraph& g, PostprocessConfig config);

  void class_completed(DisjointMatching& s, ClassId c);
  void all_completed(DisjointMatching& s);

  /// Hook for the iterative algorithms; empty for None and GlobalSwaps.
  ClassHook hook();

  std::size_t applied() const noexcept { return applied_; }

 private:
  const WeightedGraph* g_;
  PostprocessConfig config_;
  std::size_t applied_ = 0;
};

/// Postprocesses a finished solution: class by class for LocalSwaps and
/// ROMA, then GlobalSwaps if selected.
void apply_strategy(const WeightedGraph& g, DisjointMatching& s, const PostprocessConfig& config);

}  // namespace kdjm
