#include "kdjm/node_centered.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "kdjm/color_state.hpp"
#include "kdjm/deadline.hpp"

namespace kdjm {

std::string to_string(RatingFn fn) {
  switch (fn) {
    case RatingFn::Max: return "max";
    case RatingFn::Avg: return "avg";
    case RatingFn::Median: return "median";
    case RatingFn::Sum: return "sum";
    case RatingFn::KSum: return "ksum";
  }
  return "ksum";
}

RatingFn parse_rating(std::string_view text) {
  std::string s;
  for (char ch : text) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  if (s == "max") return RatingFn::Max;
  if (s == "avg" || s == "mean") return RatingFn::Avg;
  if (s == "median") return RatingFn::Median;
  if (s == "sum") return RatingFn::Sum;
  if (s == "ksum") return RatingFn::KSum;
  throw std::invalid_argument("unknown rating function '" + std::string(text) + "'");
}

namespace {

std::uint64_t parse_u64(std::string_view s, std::string_view whole) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("malformed threshold '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Theta Theta::parse(std::string_view text) {
  Theta t;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    t.num = parse_u64(text.substr(0, slash), text);
    t.den = parse_u64(text.substr(slash + 1), text);
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view frac = text.substr(dot + 1);
    if (frac.size() > 18) throw std::invalid_argument("threshold has too many digits");
    const std::uint64_t whole = dot == 0 ? 0 : parse_u64(text.substr(0, dot), text);
    t.den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) t.den *= 10;
    t.num = whole * t.den + (frac.empty() ? 0 : parse_u64(frac, text));
  } else {
    t.num = parse_u64(text, text);
    t.den = 1;
  }
  if (t.den == 0 || t.num > t.den) {
    throw std::invalid_argument("threshold must be a fraction in [0, 1]");
  }
  const std::uint64_t g = std::gcd(t.num, t.den);
  if (g > 1) {
    t.num /= g;
    t.den /= g;
  }
  if (t.num == 0) t.den = 1;
  return t;
}

std::string Theta::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rating vertex_rating(const WeightedGraph& g, VertexId v, RatingFn fn, int k) {
  const auto inc = g.incident(v);
  if (inc.empty()) return Rating{0, 1};
  std::vector<Weight> w;
  w.reserve(inc.size());
  for (const Incidence& i : inc) w.push_back(g.weight(i.edge));
  switch (fn) {
    case RatingFn::Max: return Rating{*std::max_element(w.begin(), w.end()), 1};
    case RatingFn::Sum: return Rating{std::accumulate(w.begin(), w.end(), Weight{0}), 1};
    case RatingFn::Avg:
      return Rating{std::accumulate(w.begin(), w.end(), Weight{0}), static_cast<Weight>(w.size())};
    case RatingFn::Median: {
      const std::size_t mid = (w.size() - 1) / 2;
      std::nth_element(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(mid), w.end());
      return Rating{w[mid], 1};
    }
    case RatingFn::KSum: {
      const std::size_t take = std::min(w.size(), static_cast<std::size_t>(std::max(k, 0)));
      std::partial_sort(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(take), w.end(),
                        std::greater<>());
      return Rating{std::accumulate(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(take), Weight{0}), 1};
    }
  }
  return Rating{0, 1};
}

DisjointMatching node_centered(const WeightedGraph& g, int k, RatingFn fn, Theta theta) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (theta.den == 0 || theta.num > theta.den) {
    throw std::invalid_argument("threshold must be a fraction in [0, 1]");
  }
  const std::size_t n = g.num_vertices();
  std::vector<Rating> rating(n);
  for (VertexId v = 0; v < n; ++v) rating[v] = vertex_rating(g, v, fn, k);
  std::vector<VertexId> vertices(n);
  std::iota(vertices.begin(), vertices.end(), VertexId{0});
  std::sort(vertices.begin(), vertices.end(), [&](VertexId a, VertexId b) {
    if (rating[b] < rating[a]) return true;
    if (rating[a] < rating[b]) return false;
    return a < b;
  });

  // weight < theta * D  <=>  weight * den < num * D
  const auto below = [&](Weight w) {
    return static_cast<uint128_t>(w) * theta.den <
           static_cast<uint128_t>(theta.num) * g.max_demand();
  };

  ColorState state(g, k);
  std::vector<std::uint8_t> seen(g.num_edges(), 0);
  std::vector<EdgeId> deferred;
  std::vector<Incidence> inc;
  auto try_color = [&](EdgeId e) {
    const Edge& ed = g.edge(e);
    if (state.saturated(ed.u) || state.saturated(ed.v)) return;
    for (Color c = 0; c < k; ++c) {
      if (state.is_free(ed.u, c) && state.is_free(ed.v, c)) {
        state.set_color(e, c);
        return;
      }
    }
  };

  for (VertexId v : vertices) {
    poll_deadline();
    if (state.saturated(v)) continue;
    const auto span = g.incident(v);
    inc.assign(span.begin(), span.end());
    std::stable_sort(inc.begin(), inc.end(), [&](const Incidence& a, const Incidence& b) {
      return g.weight(a.edge) > g.weight(b.edge);
    });
    for (const Incidence& i : inc) {
      if (seen[i.edge]) continue;
      seen[i.edge] = 1;
      if (below(g.weight(i.edge))) {
        deferred.push_back(i.edge);
        continue;
      }
      try_color(i.edge);
      if (state.saturated(v)) break;
    }
  }

  std::sort(deferred.begin(), deferred.end(), [&](EdgeId a, EdgeId b) {
    const Weight wa = g.weight(a);
    const Weight wb = g.weight(b);
    return wa != wb ? wa > wb : a < b;
  });
  for (EdgeId e : deferred) {
    poll_deadline();
    try_color(e);
  }
  return state.to_solution();
}

}  // namespace kdjm
