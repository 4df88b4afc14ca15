#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>
#include <random>
#include <unordered_map>

#include "kdjm/instances.hpp"

namespace kdjm {

// --- initiator -------------------------------------------------------------------

namespace {

std::uint32_t to_millionths(double p) {
  if (!std::isfinite(p) || p < 0 || p > 1) {
    throw InvalidInitiator("initiator entries must lie in [0, 1]");
  }
  const double scaled = p * InitiatorMatrix::kScale;
  const double rounded = std::round(scaled);
  if (std::fabs(scaled - rounded) > 1e-6) {
    throw InvalidInitiator("initiator entries must be multiples of 1e-6");
  }
  return static_cast<std::uint32_t>(rounded);
}

std::string millionths(std::uint32_t x) {
  std::string s = std::to_string(x / InitiatorMatrix::kScale) + ".";
  std::string frac = std::to_string(x % InitiatorMatrix::kScale);
  frac.insert(0, 6 - frac.size(), '0');
  while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
  return s + frac;
}

}  // namespace

InitiatorMatrix InitiatorMatrix::from_probabilities(double a, double b, double c, double d) {
  InitiatorMatrix m{to_millionths(a), to_millionths(b), to_millionths(c), to_millionths(d)};
  if (std::uint64_t{m.a} + m.b + m.c + m.d != kScale) {
    throw InvalidInitiator("initiator probabilities must sum to 1");
  }
  return m;
}

InitiatorMatrix InitiatorMatrix::parse(std::string_view text) {
  if (text == "rmat_b") return rmat_b();
  if (text == "rmat_g") return rmat_g();
  if (text == "rmat_er") return rmat_er();
  double p[4];
  std::size_t pos = 0;
  for (int i = 0; i < 4; ++i) {
    const std::size_t end = i < 3 ? text.find(':', pos) : text.size();
    if (end == std::string_view::npos) throw InvalidInitiator("expected 'a:b:c:d' or a preset name");
    const std::string_view tok = text.substr(pos, end - pos);
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), p[i]);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw InvalidInitiator("malformed initiator entry '" + std::string(tok) + "'");
    }
    pos = end + 1;
  }
  return from_probabilities(p[0], p[1], p[2], p[3]);
}

std::string InitiatorMatrix::to_string() const {
  if (*this == rmat_b()) return "rmat_b";
  if (*this == rmat_g()) return "rmat_g";
  if (*this == rmat_er()) return "rmat_er";
  return millionths(a) + ":" + millionths(b) + ":" + millionths(c) + ":" + millionths(d);
}

// --- RMAT ------------------------------------------------------------------------

WeightedGraph gen_rmat(const RmatParams& p) {
  if (p.scale > 30) throw std::invalid_argument("RMAT scale must be at most 30");
  if (p.max_demand < 1) throw std::invalid_argument("maximum demand must be positive");
  {
    const InitiatorMatrix& m = p.initiator;
    if (std::uint64_t{m.a} + m.b + m.c + m.d != InitiatorMatrix::kScale) {
      throw InvalidInitiator("initiator probabilities must sum to 1");
    }
  }
  const std::uint64_t n = std::uint64_t{1} << p.scale;
  const std::uint64_t samples = n * p.edge_factor;
  std::mt19937_64 rng(p.seed);
  std::uniform_int_distribution<std::uint32_t> quadrant(0, InitiatorMatrix::kScale - 1);

  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  pairs.reserve(samples);
  const std::uint32_t ab = p.initiator.a + p.initiator.b;
  const std::uint32_t abc = ab + p.initiator.c;
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::uint32_t u = 0;
    std::uint32_t v = 0;
    for (unsigned level = 0; level < p.scale; ++level) {
      const std::uint32_t r = quadrant(rng);
      const std::uint32_t bit = 1u << level;
      if (r < p.initiator.a) continue;
      if (r < ab) {
        v |= bit;
      } else if (r < abc) {
        u |= bit;
      } else {
        u |= bit;
        v |= bit;
      }
    }
    if (u == v) continue;
    pairs.emplace_back(std::min(u, v), std::max(u, v));
  }

  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), VertexId{0});
  std::shuffle(perm.begin(), perm.end(), rng);

  for (auto& [u, v] : pairs) {
    const VertexId a = perm[u];
    const VertexId b = perm[v];
    u = std::min(a, b);
    v = std::max(a, b);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  std::uniform_int_distribution<Weight> uniform(1, p.max_demand);
  std::exponential_distribution<double> expo(10.0 / static_cast<double>(p.max_demand));
  for (const auto& [u, v] : pairs) {
    Weight w = 0;
    if (p.dist == DemandDist::Uniform) {
      w = uniform(rng);
    } else {
      const double x = std::ceil(expo(rng));
      w = x >= static_cast<double>(p.max_demand) ? p.max_demand : std::max<Weight>(1, static_cast<Weight>(x));
    }
    edges.push_back({u, v, w});
  }
  return WeightedGraph::build(n, edges);
}

// --- pFabric-like --------------------------------------------------------------------

WeightedGraph gen_pfabric_like(const PfabricParams& p) {
  if (!(p.rate > 0) || !std::isfinite(p.rate)) throw std::invalid_argument("rate must be positive");
  if (!(p.horizon >= 0) || !std::isfinite(p.horizon)) {
    throw std::invalid_argument("horizon must be non-negative");
  }
  if (p.hosts < 2) throw std::invalid_argument("at least two hosts are required");
  constexpr double kAlpha = 1.1;
  constexpr double kLow = 1.0;
  constexpr double kHigh = 30000.0;
  const double tail = std::pow(kLow / kHigh, kAlpha);

  std::mt19937_64 rng(p.seed);
  std::exponential_distribution<double> gap(p.rate);
  std::uniform_int_distribution<std::size_t> other(0, p.hosts - 2);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<Weight> demand(p.hosts * p.hosts, 0);
  for (std::size_t src = 0; src < p.hosts; ++src) {
    for (double t = gap(rng); t < p.horizon; t += gap(rng)) {
      std::size_t dst = other(rng);
      if (dst >= src) ++dst;
      // Bounded Pareto by inversion.
      const double u = unit(rng);
      const double size = kLow / std::pow(1.0 - u * (1.0 - tail), 1.0 / kAlpha);
      const auto volume = static_cast<Weight>(std::ceil(std::min(size, kHigh)));
      demand[std::min(src, dst) * p.hosts + std::max(src, dst)] += volume;
    }
  }
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < p.hosts; ++u) {
    for (std::size_t v = u + 1; v < p.hosts; ++v) {
      const Weight w = demand[u * p.hosts + v];
      if (w > 0) edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v), w});
    }
  }
  return WeightedGraph::build(p.hosts, edges);
}

// --- gadgets -------------------------------------------------------------------------

WeightedGraph gen_hypercube_pendant(int k) {
  if (k < 1 || k > 10) throw std::invalid_argument("hypercube dimension must be in 1..10");
  const VertexId cube = VertexId{1} << k;
  const auto kk = static_cast<VertexId>(k);
  std::vector<Edge> edges;
  for (VertexId v = 0; v < cube; ++v) {
    for (int i = 0; i < k; ++i) {
      const VertexId w = v ^ (VertexId{1} << i);
      if (v < w) edges.push_back({v, w, 1001});
    }
    for (VertexId j = 0; j < kk; ++j) edges.push_back({v, cube + v * kk + j, 1000});
  }
  return WeightedGraph::build(cube * (1 + kk), edges);
}

WeightedGraph gen_triangle_pendant() {
  const Edge edges[] = {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {0, 3, 1}, {1, 4, 1}, {2, 5, 1}};
  return WeightedGraph::build(6, edges);
}

// --- instance specifications ---------------------------------------------------------

namespace {

const std::map<std::string, std::vector<std::string>>& allowed_keys() {
  static const std::map<std::string, std::vector<std::string>> keys = {
      {"edgelist", {"path"}},
      {"mtx", {"path", "scale"}},
      {"trace", {"path"}},
      {"rmat", {"x", "init", "dist", "ef", "maxd", "seed"}},
      {"pfabric", {"n", "rate", "horizon", "seed"}},
      {"hypercube", {"k"}},
      {"triangle", {}},
  };
  return keys;
}

template <class T>
T number(const InstanceSpec& spec, const std::string& key, T fallback) {
  const auto it = spec.params.find(key);
  if (it == spec.params.end()) return fallback;
  T value{};
  const std::string& s = it->second;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad value for '" + key + "': '" + s + "'");
  }
  return value;
}

const std::string& required(const InstanceSpec& spec, const std::string& key) {
  const auto it = spec.params.find(key);
  if (it == spec.params.end()) {
    throw std::invalid_argument("instance kind '" + spec.kind + "' requires '" + key + "'");
  }
  return it->second;
}

}  // namespace

InstanceSpec InstanceSpec::parse(std::string_view text) {
  InstanceSpec spec;
  if (text.find('=') == std::string_view::npos) {
    const std::string word(text);
    if (word == "triangle" || word == "hypercube") {
      spec.kind = word;
      return spec;
    }
    const std::filesystem::path path(word);
    const std::string ext = path.extension().string();
    spec.kind = ext == ".mtx" ? "mtx" : ext == ".trace" ? "trace" : "edgelist";
    spec.params["path"] = word;
    return spec;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, end - pos);
    pos = end + 1;
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw std::invalid_argument("expected key=value, got '" + std::string(item) + "'");
    }
    const std::string key(item.substr(0, eq));
    const std::string value(item.substr(eq + 1));
    if (key == "kind") {
      spec.kind = value;
    } else if (!spec.params.emplace(key, value).second) {
      throw std::invalid_argument("repeated key '" + key + "'");
    }
  }
  const auto it = allowed_keys().find(spec.kind);
  if (it == allowed_keys().end()) {
    throw std::invalid_argument("unknown instance kind '" + spec.kind + "'");
  }
  for (const auto& [key, value] : spec.params) {
    if (std::find(it->second.begin(), it->second.end(), key) == it->second.end()) {
      throw std::invalid_argument("key '" + key + "' not valid for kind '" + spec.kind + "'");
    }
  }
  if (spec.stochastic() && !spec.params.count("seed")) {
    throw std::invalid_argument("instance kind '" + spec.kind + "' requires an explicit seed");
  }
  return spec;
}

std::string InstanceSpec::to_string() const {
  std::string out = "kind=" + kind;
  for (const auto& [key, value] : params) out += "," + key + "=" + value;
  return out;
}

WeightedGraph load_instance(const InstanceSpec& spec) {
  if (spec.kind == "edgelist") return read_edge_list(std::filesystem::path(required(spec, "path")));
  if (spec.kind == "mtx") {
    MatrixMarketOptions opt;
    opt.scale = number<double>(spec, "scale", 1.0);
    return read_matrix_market(std::filesystem::path(required(spec, "path")), opt);
  }
  if (spec.kind == "trace") return read_trace(std::filesystem::path(required(spec, "path")));
  if (spec.kind == "rmat") {
    RmatParams p;
    p.scale = number<unsigned>(spec, "x", 10);
    if (auto it = spec.params.find("init"); it != spec.params.end()) {
      p.initiator = InitiatorMatrix::parse(it->second);
    }
    if (auto it = spec.params.find("dist"); it != spec.params.end()) {
      if (it->second == "uni") {
        p.dist = DemandDist::Uniform;
      } else if (it->second == "exp") {
        p.dist = DemandDist::Exponential;
      } else {
        throw std::invalid_argument("dist must be 'uni' or 'exp'");
      }
    }
    p.edge_factor = number<unsigned>(spec, "ef", 16);
    p.max_demand = number<Weight>(spec, "maxd", 500000);
    p.seed = number<std::uint64_t>(spec, "seed", 0);
    if (!spec.params.count("seed")) throw std::invalid_argument("rmat requires a seed");
    return gen_rmat(p);
  }
  if (spec.kind == "pfabric") {
    PfabricParams p;
    p.hosts = number<std::size_t>(spec, "n", 144);
    p.rate = number<double>(spec, "rate", 0.5);
    p.horizon = number<double>(spec, "horizon", 1000.0);
    p.seed = number<std::uint64_t>(spec, "seed", 0);
    if (!spec.params.count("seed")) throw std::invalid_argument("pfabric requires a seed");
    return gen_pfabric_like(p);
  }
  if (spec.kind == "hypercube") return gen_hypercube_pendant(number<int>(spec, "k", 3));
  if (spec.kind == "triangle") return gen_triangle_pendant();
  throw std::invalid_argument("unknown instance kind '" + spec.kind + "'");
}

}  // namespace kdjm
