#include "kdjm/instances.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace kdjm {

namespace {

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path.string() + "'");
  return f;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path.string() + "' for writing");
  return f;
}

std::string_view strip_comment(std::string_view line, char marker) {
  if (const auto pos = line.find(marker); pos != std::string_view::npos) line = line.substr(0, pos);
  return line;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <class T>
T parse_number(std::string_view tok, std::size_t line, const char* what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(std::string("malformed ") + what + " '" + std::string(tok) + "'", line);
  }
  return value;
}

double parse_real(std::string_view tok, std::size_t line) {
  double value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || !std::isfinite(value)) {
    throw ParseError("malformed value '" + std::string(tok) + "'", line);
  }
  return value;
}

Weight checked_add(Weight a, Weight b, std::size_t line) {
  if (a > std::numeric_limits<Weight>::max() - b) throw ParseError("demand overflow", line);
  return a + b;
}

struct PairKey {
  std::uint64_t u;
  std::uint64_t v;
  friend bool operator==(const PairKey&, const PairKey&) = default;
};

struct PairHash {
  std::size_t operator()(const PairKey& k) const noexcept {
    return std::hash<std::uint64_t>{}(k.u * 0x9e3779b97f4a7c15ULL ^ k.v);
  }
};

/// Builds a graph from accumulated pair weights over dense ids.
WeightedGraph from_pairs(std::size_t n,
                         const std::unordered_map<PairKey, Weight, PairHash>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [key, w] : pairs) {
    if (w == 0) continue;
    edges.push_back({static_cast<VertexId>(key.u), static_cast<VertexId>(key.v), w});
  }
  std::sort(edges.begin(), edges.end());
  return WeightedGraph::build(n, edges);
}

}  // namespace

// --- edge lists ------------------------------------------------------------------

WeightedGraph read_edge_list(std::istream& in) {
  struct Raw {
    std::uint64_t u;
    std::uint64_t v;
    Weight w;
    std::size_t line;
  };
  std::vector<Raw> raw;
  std::vector<std::uint64_t> ids;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tokens = split_ws(strip_comment(line, '#'));
    if (tokens.empty()) continue;
    if (tokens.size() != 3) throw ParseError("expected 'u v w'", lineno);
    const auto u = parse_number<std::uint64_t>(tokens[0], lineno, "vertex id");
    const auto v = parse_number<std::uint64_t>(tokens[1], lineno, "vertex id");
    const auto w = parse_number<Weight>(tokens[2], lineno, "demand");
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), lineno);
    if (w == 0) throw ParseError("zero demand", lineno);
    raw.push_back({u, v, w, lineno});
    ids.push_back(u);
    ids.push_back(v);
  }
  if (in.bad()) throw IoError("read error");
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  auto dense = [&](std::uint64_t x) {
    return static_cast<std::uint64_t>(std::lower_bound(ids.begin(), ids.end(), x) - ids.begin());
  };
  std::unordered_map<PairKey, Weight, PairHash> pairs;
  for (const Raw& r : raw) {
    std::uint64_t a = dense(r.u);
    std::uint64_t b = dense(r.v);
    if (a > b) std::swap(a, b);
    Weight& slot = pairs[{a, b}];
    slot = checked_add(slot, r.w, r.line);
  }
  return from_pairs(ids.size(), pairs);
}

WeightedGraph read_edge_list(const std::filesystem::path& path) {
  auto f = open_input(path);
  return read_edge_list(f);
}

void write_edge_list(const WeightedGraph& g, std::ostream& out) {
  out << "# n=" << g.num_vertices() << " m=" << g.num_edges() << "\n";
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.w << '\n';
}

void write_edge_list(const WeightedGraph& g, const std::filesystem::path& path) {
  auto f = open_output(path);
  write_edge_list(g, f);
  f.flush();
  if (!f) throw IoError("failed writing '" + path.string() + "'");
}

// --- matrix market --------------------------------------------------------------

WeightedGraph read_matrix_market(std::istream& in, const MatrixMarketOptions& options) {
  if (!(options.scale > 0) || !std::isfinite(options.scale)) {
    throw std::invalid_argument("matrix market scale must be positive");
  }
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) throw ParseError("empty file", 0);
  ++lineno;
  std::string header;
  for (char ch : line) header.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  const auto h = split_ws(header);
  if (h.size() != 5 || h[0] != "%%matrixmarket" || h[1] != "matrix") {
    throw ParseError("missing %%MatrixMarket matrix header", lineno);
  }
  if (h[2] != "coordinate") throw UnsupportedFormat("only coordinate matrices are supported");
  const std::string_view field = h[3];
  const std::string_view symmetry = h[4];
  if (field != "real" && field != "integer" && field != "pattern") {
    throw UnsupportedFormat("unsupported field '" + std::string(field) + "'");
  }
  if (symmetry != "general" && symmetry != "symmetric" && symmetry != "skew-symmetric") {
    throw UnsupportedFormat("unsupported symmetry '" + std::string(symmetry) + "'");
  }
  const bool pattern = field == "pattern";

  std::uint64_t rows = 0;
  std::uint64_t cols = 0;
  std::uint64_t nnz = 0;
  bool have_size = false;
  std::unordered_map<PairKey, double, PairHash> magnitude;
  std::uint64_t seen = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tokens = split_ws(strip_comment(line, '%'));
    if (tokens.empty()) continue;
    if (!have_size) {
      if (tokens.size() != 3) throw ParseError("expected 'rows cols entries'", lineno);
      rows = parse_number<std::uint64_t>(tokens[0], lineno, "row count");
      cols = parse_number<std::uint64_t>(tokens[1], lineno, "column count");
      nnz = parse_number<std::uint64_t>(tokens[2], lineno, "entry count");
      if (std::max(rows, cols) > std::numeric_limits<VertexId>::max()) {
        throw ParseError("matrix too large", lineno);
      }
      have_size = true;
      continue;
    }
    if (tokens.size() != (pattern ? 2u : 3u)) throw ParseError("wrong number of fields", lineno);
    const auto i = parse_number<std::uint64_t>(tokens[0], lineno, "row index");
    const auto j = parse_number<std::uint64_t>(tokens[1], lineno, "column index");
    if (i < 1 || i > rows || j < 1 || j > cols) throw ParseError("index out of range", lineno);
    const double value = pattern ? 1.0 : std::fabs(parse_real(tokens[2], lineno));
    ++seen;
    if (i == j || value == 0.0) continue;
    const PairKey key{std::min(i, j) - 1, std::max(i, j) - 1};
    double& slot = magnitude[key];
    slot = std::max(slot, value);
  }
  if (in.bad()) throw IoError("read error");
  if (!have_size) throw ParseError("missing size line", lineno);
  if (seen != nnz) {
    throw ParseError("expected " + std::to_string(nnz) + " entries, found " + std::to_string(seen), 0);
  }
  std::unordered_map<PairKey, Weight, PairHash> pairs;
  for (const auto& [key, value] : magnitude) {
    const double scaled = std::round(value * options.scale);
    if (scaled >= 9.0e18) throw ParseError("entry too large after scaling", 0);
    pairs[key] = std::max<Weight>(1, static_cast<Weight>(scaled));
  }
  return from_pairs(static_cast<std::size_t>(std::max(rows, cols)), pairs);
}

WeightedGraph read_matrix_market(const std::filesystem::path& path,
                                 const MatrixMarketOptions& options) {
  auto f = open_input(path);
  return read_matrix_market(f, options);
}

// --- traces -----------------------------------------------------------------------

WeightedGraph aggregate_trace(std::span<const TraceRecord> records,
                              std::vector<std::string>* labels) {
  std::unordered_map<std::string, std::uint64_t> id;
  std::vector<std::string> names;
  auto lookup = [&](const std::string& s) {
    auto [it, inserted] = id.try_emplace(s, names.size());
    if (inserted) names.push_back(s);
    return it->second;
  };
  std::unordered_map<PairKey, Weight, PairHash> pairs;
  for (const TraceRecord& r : records) {
    if (r.src == r.dst) continue;
    std::uint64_t a = lookup(r.src);
    std::uint64_t b = lookup(r.dst);
    if (a > b) std::swap(a, b);
    Weight& slot = pairs[{a, b}];
    slot = checked_add(slot, r.volume, 0);
  }
  const std::size_t n = names.size();
  if (labels) *labels = std::move(names);
  return from_pairs(n, pairs);
}

WeightedGraph read_trace(std::istream& in, std::vector<std::string>* labels) {
  std::vector<TraceRecord> records;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tokens = split_ws(strip_comment(line, '#'));
    if (tokens.empty()) continue;
    if (tokens.size() != 3) throw ParseError("expected 'src dst volume'", lineno);
    records.push_back({std::string(tokens[0]), std::string(tokens[1]),
                       parse_number<Weight>(tokens[2], lineno, "volume")});
  }
  if (in.bad()) throw IoError("read error");
  return aggregate_trace(records, labels);
}

WeightedGraph read_trace(const std::filesystem::path& path, std::vector<std::string>* labels) {
  auto f = open_input(path);
  return read_trace(f, labels);
}

}  // namespace kdjm
