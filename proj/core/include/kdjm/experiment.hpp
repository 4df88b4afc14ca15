#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kdjm/algorithm.hpp"
#include "kdjm/instances.hpp"

namespace kdjm {

enum class RunStatus { Ok, Timeout, Error };

std::string to_string(RunStatus s);
RunStatus parse_status(std::string_view text);

struct ExperimentPlan {
  std::vector<InstanceSpec> instances;
  std::vector<AlgorithmConfig> algorithms;
  std::vector<int> ks{2, 4, 8, 16, 32, 64, 96};
  int repetitions = 3;
  std::chrono::nanoseconds timeout = std::chrono::hours(4);
  std::filesystem::path output;
  std::uint64_t seed = 0;
  /// Compute OPT with the exact solver where it is within its limits.
  bool oracle = false;
  /// Measure wall times. Without timing, cells may run on `jobs` threads.
  bool timing = true;
  int jobs = 1;
  /// Best-effort pinning of the runner to one CPU while timing.
  bool pin_cpu = false;

  /// Throws std::invalid_argument for empty lists, k < 1 or an even
  /// repetition count.
  void validate() const;

  /// Line-oriented key=value file: instance=, alg= (repeatable), k=2,4,
  /// reps=, timeout= (e.g. 30s, 500ms, 4h), seed=, out=, oracle=,
  /// timing=, jobs=, pin=. '#' starts a comment.
  static ExperimentPlan parse(std::istream& in);
  static ExperimentPlan parse_file(const std::filesystem::path& path);
};

/// "90", "30s", "500ms", "2m", "4h", "250us", "10ns"; bare numbers are seconds.
std::chrono::nanoseconds parse_duration(std::string_view text);

struct ExperimentRecord {
  std::string instance;
  std::string algorithm;
  std::string config;
  int k = 0;
  std::uint64_t seed = 0;
  RunStatus status = RunStatus::Ok;
  std::optional<Weight> weight;
  std::vector<Weight> class_weights;
  std::vector<std::int64_t> times_ns;
  std::optional<std::int64_t> median_ns;
  std::optional<double> rel_quality;
  std::string message;

  friend bool operator==(const ExperimentRecord&, const ExperimentRecord&) = default;
};

/// Middle order statistic (lower middle for an even count).
std::int64_t median_time(std::vector<std::int64_t> times);

/// Quality against OPT where `optimum` has an entry for (instance, k),
/// otherwise against the best weight any ok record reached on that cell.
void compute_relative_quality(std::vector<ExperimentRecord>& records,
                              const std::map<std::pair<std::string, int>, Weight>& optimum = {});

std::vector<ExperimentRecord> run_plan(const ExperimentPlan& plan);

inline constexpr const char* kCsvHeader =
    "instance,algorithm,config,k,seed,status,weight,rel_quality,t1_ns,t2_ns,t3_ns,t_median_ns";

/// RFC 4180 CSV with the fixed header. Only the first three times fit.
void write_csv(const std::vector<ExperimentRecord>& records, std::ostream& out);
void write_csv(const std::vector<ExperimentRecord>& records, const std::filesystem::path& path);
std::vector<ExperimentRecord> read_csv(std::istream& in);
std::vector<ExperimentRecord> read_csv(const std::filesystem::path& path);

struct ReportRow {
  std::string label;  ///< algorithm[:config]
  std::optional<double> speedup;  ///< geometric mean of baseline time / own time
  std::size_t compared_cells = 0;
  std::map<int, double> mean_quality;
  std::map<int, double> min_quality;
};

struct RuntimeTrend {
  std::string label;
  int k_low = 0;
  int k_high = 0;
  std::optional<double> growth;  ///< geometric mean over instances of t(k_high) / t(k_low)
};

struct Report {
  std::string baseline;
  std::vector<ReportRow> rows;
  std::vector<RuntimeTrend> trends;
};

/// Summary of one plan's records. The baseline is matched against the
/// algorithm name or the full label.
Report compare_report(const std::vector<ExperimentRecord>& records,
                      const std::string& baseline = "greedy_it", int trend_low = 2,
                      int trend_high = 16);
std::string format_report(const Report& report);

}  // namespace kdjm
