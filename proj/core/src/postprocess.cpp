#include "kdjm/postprocess.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>
#include <stdexcept>

#include "kdjm/deadline.hpp"

namespace kdjm {

namespace {

/// Class-c edge at every vertex, kept in sync with applied augmentations.
struct ClassMates {
  std::vector<EdgeId> at;

  void load(const WeightedGraph& g, const DisjointMatching& s, ClassId c) {
    at.assign(g.num_vertices(), kNoEdge);
    for (EdgeId e : s.class_edges(c)) {
      at[g.edge(e).u] = e;
      at[g.edge(e).v] = e;
    }
  }
};

struct Option {
  EdgeId edge = kNoEdge;
  VertexId far = kNoVertex;
  Weight w = 0;
};

void top_two(const WeightedGraph& g, const DisjointMatching& s, const ClassMates& mates, VertexId x,
             Option (&top)[2]) {
  for (const Incidence& i : g.incident(x)) {
    if (s.assigned(i.edge) || mates.at[i.neighbor] != kNoEdge) continue;
    const Option o{i.edge, i.neighbor, g.weight(i.edge)};
    if (top[0].edge == kNoEdge || o.w > top[0].w) {
      top[1] = top[0];
      top[0] = o;
    } else if (top[1].edge == kNoEdge || o.w > top[1].w) {
      top[1] = o;
    }
  }
}

std::optional<SwapCandidate> augment(const WeightedGraph& g, DisjointMatching& s, ClassId c,
                                     ClassMates& mates, EdgeId e) {
  const Edge& ed = g.edge(e);
  Option at_u[2];
  Option at_v[2];
  top_two(g, s, mates, ed.u, at_u);
  top_two(g, s, mates, ed.v, at_v);
  SwapCandidate best;
  for (const Option& a : at_u) {
    for (const Option& b : at_v) {
      if (a.edge == kNoEdge || b.edge == kNoEdge || a.far == b.far) continue;
      const Weight sum = a.w + b.w;
      if (sum <= ed.w) continue;
      if (best.matched == kNoEdge || sum - ed.w > best.gain) best = {e, a.edge, b.edge, sum - ed.w};
    }
  }
  if (best.matched == kNoEdge) return std::nullopt;
  s.unassign(g, e);
  s.assign(g, best.left, c);
  s.assign(g, best.right, c);
  for (EdgeId x : {best.left, best.right}) {
    mates.at[g.edge(x).u] = x;
    mates.at[g.edge(x).v] = x;
  }
  return best;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Uniform draw in [0, bound) by rejection; identical on every platform.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

}  // namespace

std::optional<SwapCandidate> max_gain_two_augmentation(const WeightedGraph& g, DisjointMatching& s,
                                                       ClassId c, EdgeId e) {
  if (s.class_of(e) != c) throw std::invalid_argument("edge is not in the given class");
  ClassMates mates;
  mates.load(g, s, c);
  return augment(g, s, c, mates, e);
}

std::size_t swaps(const WeightedGraph& g, DisjointMatching& s, ClassId c) {
  std::vector<EdgeId> edges(s.class_edges(c).begin(), s.class_edges(c).end());
  std::sort(edges.begin(), edges.end(), [&](EdgeId a, EdgeId b) {
    const Weight wa = g.weight(a);
    const Weight wb = g.weight(b);
    return wa != wb ? wa > wb : a < b;
  });
  ClassMates mates;
  mates.load(g, s, c);
  std::size_t applied = 0;
  for (EdgeId e : edges) {
    poll_deadline();
    if (s.class_of(e) != c) continue;
    if (augment(g, s, c, mates, e)) ++applied;
  }
  return applied;
}

std::size_t roma(const WeightedGraph& g, DisjointMatching& s, ClassId c, int rounds,
                 std::uint64_t seed) {
  if (rounds < 1) throw std::invalid_argument("ROMA needs at least one round");
  const std::size_t n = g.num_vertices();
  ClassMates mates;
  mates.load(g, s, c);
  std::vector<VertexId> order(n);
  std::size_t sweeps = 0;
  for (int round = 0; round < rounds; ++round) {
    const std::uint64_t mixed = splitmix64(
        splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(c))) + static_cast<std::uint64_t>(round));
    std::mt19937_64 rng(mixed);
    std::iota(order.begin(), order.end(), VertexId{0});
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[bounded(rng, i)]);
    bool changed = false;
    for (VertexId v : order) {
      poll_deadline();
      const EdgeId e = mates.at[v];
      if (e == kNoEdge) continue;
      if (augment(g, s, c, mates, e)) changed = true;
    }
    ++sweeps;
    if (!changed) break;
  }
  return sweeps;
}

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::None: return "none";
    case Strategy::LocalSwaps: return "local";
    case Strategy::GlobalSwaps: return "global";
    case Strategy::Roma: return "roma";
  }
  return "none";
}

Strategy parse_strategy(std::string_view text) {
  std::string s;
  for (char ch : text) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  if (s.empty() || s == "none") return Strategy::None;
  if (s == "local" || s == "localswaps") return Strategy::LocalSwaps;
  if (s == "global" || s == "globalswaps") return Strategy::GlobalSwaps;
  if (s == "roma") return Strategy::Roma;
  throw std::invalid_argument("unknown postprocessing strategy '" + std::string(text) + "'");
}

Postprocessor::Postprocessor(const WeightedGraph& g, PostprocessConfig config)
    : g_(&g), config_(config) {
  if (config_.strategy == Strategy::Roma && config_.roma_rounds < 1) {
    throw std::invalid_argument("ROMA needs at least one round");
  }
}

void Postprocessor::class_completed(DisjointMatching& s, ClassId c) {
  switch (config_.strategy) {
    case Strategy::LocalSwaps:
      applied_ += swaps(*g_, s, c);
      break;
    case Strategy::Roma:
      applied_ += roma(*g_, s, c, config_.roma_rounds, config_.seed);
      break;
    default:
      break;
  }
}

void Postprocessor::all_completed(DisjointMatching& s) {
  if (config_.strategy != Strategy::GlobalSwaps) return;
  for (ClassId c = 0; c < s.k(); ++c) applied_ += swaps(*g_, s, c);
}

ClassHook Postprocessor::hook() {
  if (config_.strategy != Strategy::LocalSwaps && config_.strategy != Strategy::Roma) return {};
  return [this](DisjointMatching& s, ClassId c) { class_completed(s, c); };
}

void apply_strategy(const WeightedGraph& g, DisjointMatching& s, const PostprocessConfig& config) {
  Postprocessor post(g, config);
  for (ClassId c = 0; c < s.k(); ++c) post.class_completed(s, c);
  post.all_completed(s);
}

}  // namespace kdjm
