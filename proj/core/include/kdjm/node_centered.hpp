#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "kdjm/graph.hpp"

namespace kdjm {

__extension__ typedef unsigned __int128 uint128_t;

enum class RatingFn { Max, Avg, Median, Sum, KSum };

std::string to_string(RatingFn fn);
/// Accepts max, avg, median, sum, ksum (any case).
RatingFn parse_rating(std::string_view text);

/// Exact vertex rating num / den.
struct Rating {
  Weight num = 0;
  Weight den = 1;

  friend bool operator==(const Rating& a, const Rating& b) {
    return static_cast<uint128_t>(a.num) * b.den ==
           static_cast<uint128_t>(b.num) * a.den;
  }
  friend bool operator<(const Rating& a, const Rating& b) {
    return static_cast<uint128_t>(a.num) * b.den <
           static_cast<uint128_t>(b.num) * a.den;
  }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Threshold theta = num / den in [0, 1].
struct Theta {
  std::uint64_t num = 1;
  std::uint64_t den = 5;

  /// Decimal ("0.2") or fraction ("1/5"); must lie in [0, 1].
  static Theta parse(std::string_view text);
  std::string to_string() const;
  friend bool operator==(const Theta& a, const Theta& b) {
    return static_cast<uint128_t>(a.num) * b.den ==
           static_cast<uint128_t>(b.num) * a.den;
  }
};

Rating vertex_rating(const WeightedGraph& g, VertexId v, RatingFn fn, int k);

/// Phase 1 visits vertices by decreasing rating and gives each incident edge
/// of weight at least theta * D the lowest color free on both ends. Phase 2
/// colors the edges skipped by the threshold greedily in global weight order.
DisjointMatching node_centered(const WeightedGraph& g, int k, RatingFn fn = RatingFn::KSum,
                               Theta theta = Theta{});

}  // namespace kdjm
