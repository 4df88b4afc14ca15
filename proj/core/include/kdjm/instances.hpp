#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kdjm/errors.hpp"
#include "kdjm/graph.hpp"

namespace kdjm {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  /// 1-based line number, 0 if not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class UnsupportedFormat : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInitiator : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// --- readers and writers ------------------------------------------------------

/// "u v w" per line; '#' starts a comment. Vertex ids may be sparse and are
/// renumbered densely in ascending order. Repeated pairs add up.
WeightedGraph read_edge_list(std::istream& in);
WeightedGraph read_edge_list(const std::filesystem::path& path);

void write_edge_list(const WeightedGraph& g, std::ostream& out);
void write_edge_list(const WeightedGraph& g, const std::filesystem::path& path);

struct MatrixMarketOptions {
  /// Demand = max(1, round(|value| * scale)).
  double scale = 1.0;
};

/// Coordinate matrices (real, integer or pattern; general, symmetric or
/// skew-symmetric). Off-diagonal entries become edges; the two directions
/// of a pair are merged by the larger magnitude. Zero entries are dropped.
WeightedGraph read_matrix_market(std::istream& in, const MatrixMarketOptions& options = {});
WeightedGraph read_matrix_market(const std::filesystem::path& path,
                                 const MatrixMarketOptions& options = {});

struct TraceRecord {
  std::string src;
  std::string dst;
  Weight volume = 0;
};

/// Demand of a pair = total volume in both directions. Vertices are
/// numbered in order of first appearance; self-flows are ignored.
WeightedGraph aggregate_trace(std::span<const TraceRecord> records,
                              std::vector<std::string>* labels = nullptr);

/// "src dst volume" lines with arbitrary labels.
WeightedGraph read_trace(std::istream& in, std::vector<std::string>* labels = nullptr);
WeightedGraph read_trace(const std::filesystem::path& path,
                         std::vector<std::string>* labels = nullptr);

// --- generators ---------------------------------------------------------------

/// Quadrant probabilities (a, b, c, d), stored in millionths so the sum
/// check is exact.
struct InitiatorMatrix {
  std::uint32_t a = 250000;
  std::uint32_t b = 250000;
  std::uint32_t c = 250000;
  std::uint32_t d = 250000;

  static constexpr std::uint32_t kScale = 1000000;

  /// Throws InvalidInitiator unless all entries are non-negative multiples
  /// of 1e-6 summing to exactly 1.
  static InitiatorMatrix from_probabilities(double a, double b, double c, double d);
  /// rmat_b, rmat_g, rmat_er, or "a:b:c:d".
  static InitiatorMatrix parse(std::string_view text);

  static InitiatorMatrix rmat_b() { return {550000, 150000, 150000, 150000}; }
  static InitiatorMatrix rmat_g() { return {450000, 150000, 150000, 250000}; }
  static InitiatorMatrix rmat_er() { return {250000, 250000, 250000, 250000}; }

  std::string to_string() const;
  friend bool operator==(const InitiatorMatrix&, const InitiatorMatrix&) = default;
};

enum class DemandDist { Uniform, Exponential };

struct RmatParams {
  unsigned scale = 10;  ///< 2^scale vertices
  InitiatorMatrix initiator = InitiatorMatrix::rmat_b();
  unsigned edge_factor = 16;
  DemandDist dist = DemandDist::Uniform;
  Weight max_demand = 500000;
  std::uint64_t seed = 0;
};

/// Recursive-quadrant edge sampling with a seeded vertex permutation.
/// Self-loops and repeated pairs are dropped; demands lie in [1, max_demand]
/// (uniform, or exponential with mean max_demand / 10).
WeightedGraph gen_rmat(const RmatParams& params);

struct PfabricParams {
  std::size_t hosts = 144;
  double rate = 0.5;       ///< flow arrivals per host per time unit
  double horizon = 1000;   ///< length of the simulated interval
  std::uint64_t seed = 0;
};

/// Poisson flow arrivals at every host to uniform destinations, with
/// bounded-Pareto flow sizes, aggregated into pair demands.
WeightedGraph gen_pfabric_like(const PfabricParams& params);

/// Q_k with k pendant vertices at each cube vertex. Cube edges weigh 1001,
/// pendant edges 1000. Pendant j of cube vertex v is 2^k + v * k + j.
WeightedGraph gen_hypercube_pendant(int k);

/// Unit triangle 0-1-2 with pendants 3, 4, 5 at 0, 1, 2.
WeightedGraph gen_triangle_pendant();

// --- instance specifications --------------------------------------------------

/// "kind=rmat,x=10,init=rmat_b,dist=uni,seed=42" and similar. Kinds:
/// edgelist, mtx, trace (key path), rmat, pfabric, hypercube, triangle.
struct InstanceSpec {
  std::string kind;
  std::map<std::string, std::string> params;

  /// Accepts the key=value form, a bare kind name ("triangle") or a file
  /// path whose extension selects the reader.
  static InstanceSpec parse(std::string_view text);
  /// Canonical text: kind first, then keys in lexicographic order.
  std::string to_string() const;

  bool stochastic() const { return kind == "rmat" || kind == "pfabric"; }
  friend bool operator==(const InstanceSpec&, const InstanceSpec&) = default;
};

WeightedGraph load_instance(const InstanceSpec& spec);

}  // namespace kdjm
