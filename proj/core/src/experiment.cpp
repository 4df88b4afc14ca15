#include "kdjm/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>
#include <tuple>

#ifdef __linux__
#include <sched.h>
#endif

#include "kdjm/deadline.hpp"
#include "kdjm/exact.hpp"

namespace kdjm {

std::string to_string(RunStatus s) {
  switch (s) {
    case RunStatus::Ok: return "ok";
    case RunStatus::Timeout: return "timeout";
    case RunStatus::Error: return "error";
  }
  return "error";
}

RunStatus parse_status(std::string_view text) {
  if (text == "ok") return RunStatus::Ok;
  if (text == "timeout") return RunStatus::Timeout;
  if (text == "error") return RunStatus::Error;
  throw std::invalid_argument("unknown status '" + std::string(text) + "'");
}

// --- plan -----------------------------------------------------------------------

void ExperimentPlan::validate() const {
  if (instances.empty()) throw std::invalid_argument("plan has no instances");
  if (algorithms.empty()) throw std::invalid_argument("plan has no algorithms");
  if (ks.empty()) throw std::invalid_argument("plan has no k values");
  for (int k : ks) {
    if (k < 1) throw std::invalid_argument("k values must be at least 1");
  }
  if (repetitions < 1 || repetitions % 2 == 0) {
    throw std::invalid_argument("repetitions must be a positive odd number");
  }
  if (timeout <= std::chrono::nanoseconds::zero()) {
    throw std::invalid_argument("timeout must be positive");
  }
  if (jobs < 1) throw std::invalid_argument("jobs must be at least 1");
}

std::chrono::nanoseconds parse_duration(std::string_view text) {
  std::size_t split = 0;
  while (split < text.size() && (std::isdigit(static_cast<unsigned char>(text[split])) || text[split] == '.')) {
    ++split;
  }
  const std::string_view num = text.substr(0, split);
  const std::string_view unit = text.substr(split);
  double value = 0;
  const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
  if (num.empty() || ec != std::errc{} || ptr != num.data() + num.size()) {
    throw std::invalid_argument("malformed duration '" + std::string(text) + "'");
  }
  double scale = 1e9;
  if (unit.empty() || unit == "s") {
    scale = 1e9;
  } else if (unit == "ms") {
    scale = 1e6;
  } else if (unit == "us") {
    scale = 1e3;
  } else if (unit == "ns") {
    scale = 1;
  } else if (unit == "m" || unit == "min") {
    scale = 60e9;
  } else if (unit == "h") {
    scale = 3600e9;
  } else {
    throw std::invalid_argument("unknown duration unit '" + std::string(unit) + "'");
  }
  return std::chrono::nanoseconds(static_cast<std::int64_t>(std::llround(value * scale)));
}

namespace {

bool parse_bool(std::string_view key, std::string_view v) {
  if (v == "1" || v == "true" || v == "on" || v == "yes") return true;
  if (v == "0" || v == "false" || v == "off" || v == "no") return false;
  throw std::invalid_argument("bad boolean for '" + std::string(key) + "': '" + std::string(v) + "'");
}

template <class T>
T parse_int(std::string_view key, std::string_view value) {
  T out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (value.empty() || ec != std::errc{} || ptr != value.data() + value.size()) {
    throw std::invalid_argument("bad value for '" + std::string(key) + "': '" + std::string(value) + "'");
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

ExperimentPlan ExperimentPlan::parse(std::istream& in) {
  ExperimentPlan plan;
  bool ks_given = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("expected key=value", lineno);
    }
    const std::string_view key = trim(view.substr(0, eq));
    const std::string_view value = trim(view.substr(eq + 1));
    try {
      if (key == "instance") {
        plan.instances.push_back(InstanceSpec::parse(value));
      } else if (key == "alg") {
        plan.algorithms.push_back(AlgorithmConfig::parse(value));
      } else if (key == "k") {
        if (!ks_given) plan.ks.clear();
        ks_given = true;
        std::size_t pos = 0;
        while (pos <= value.size()) {
          const std::size_t end = std::min(value.find(',', pos), value.size());
          plan.ks.push_back(parse_int<int>(key, trim(value.substr(pos, end - pos))));
          pos = end + 1;
        }
      } else if (key == "reps") {
        plan.repetitions = parse_int<int>(key, value);
      } else if (key == "timeout") {
        plan.timeout = parse_duration(value);
      } else if (key == "seed") {
        plan.seed = parse_int<std::uint64_t>(key, value);
      } else if (key == "out") {
        plan.output = std::string(value);
      } else if (key == "oracle") {
        plan.oracle = parse_bool(key, value);
      } else if (key == "timing") {
        plan.timing = parse_bool(key, value);
      } else if (key == "jobs") {
        plan.jobs = parse_int<int>(key, value);
      } else if (key == "pin") {
        plan.pin_cpu = parse_bool(key, value);
      } else {
        throw std::invalid_argument("unknown key '" + std::string(key) + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  return plan;
}

ExperimentPlan ExperimentPlan::parse_file(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open plan '" + path.string() + "'");
  return parse(f);
}

// --- running --------------------------------------------------------------------

std::int64_t median_time(std::vector<std::int64_t> times) {
  if (times.empty()) throw std::invalid_argument("no times");
  const std::size_t mid = (times.size() - 1) / 2;
  std::nth_element(times.begin(), times.begin() + static_cast<std::ptrdiff_t>(mid), times.end());
  return times[mid];
}

void compute_relative_quality(std::vector<ExperimentRecord>& records,
                              const std::map<std::pair<std::string, int>, Weight>& optimum) {
  std::map<std::pair<std::string, int>, Weight> best;
  for (const auto& r : records) {
    if (r.status != RunStatus::Ok || !r.weight) continue;
    Weight& b = best[{r.instance, r.k}];
    b = std::max(b, *r.weight);
  }
  for (auto& r : records) {
    r.rel_quality.reset();
    if (r.status != RunStatus::Ok || !r.weight) continue;
    const auto key = std::make_pair(r.instance, r.k);
    const auto it = optimum.find(key);
    const Weight ref = it != optimum.end() ? it->second : best[key];
    r.rel_quality = ref == 0 ? 1.0 : static_cast<double>(*r.weight) / static_cast<double>(ref);
  }
}

namespace {

void pin_to_current_cpu() {
#ifdef __linux__
  const int cpu = sched_getcpu();
  if (cpu < 0) return;
  cpu_set_t set;
  CPU_ZERO(&set);
  CPU_SET(cpu, &set);
  sched_setaffinity(0, sizeof(set), &set);
#endif
}

ExperimentRecord run_cell(const WeightedGraph& g, const std::string& instance,
                          const AlgorithmConfig& config, int k, const ExperimentPlan& plan) {
  ExperimentRecord rec;
  rec.instance = instance;
  rec.algorithm = config.name();
  rec.config = config.options();
  rec.k = k;
  rec.seed = config.seed.value_or(plan.seed);
  std::vector<std::vector<EdgeId>> reference;

  for (int rep = 0; rep < plan.repetitions; ++rep) {
    const std::uint64_t seed = config.deterministic() ? rec.seed : rec.seed + static_cast<std::uint64_t>(rep);
    AlgorithmConfig cfg = config;
    cfg.seed = seed;
    DisjointMatching s;
    std::int64_t elapsed = 0;
    try {
      ScopedDeadline deadline(plan.timeout);
      const auto t0 = std::chrono::steady_clock::now();
      s = run_algorithm(g, k, cfg, seed);
      const auto t1 = std::chrono::steady_clock::now();
      elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
    } catch (const TimeoutExpired&) {
      rec.status = RunStatus::Timeout;
      rec.message = "timeout in repetition " + std::to_string(rep);
      break;
    } catch (const std::exception& e) {
      rec.status = RunStatus::Error;
      rec.message = e.what();
      break;
    }
    if (const auto report = validate_solution(g, s); !report.ok()) {
      rec.status = RunStatus::Error;
      rec.message = "invalid solution: " + report.message;
      break;
    }
    if (rep == 0) {
      rec.weight = s.total_weight();
      rec.class_weights.assign(s.class_weights().begin(), s.class_weights().end());
      if (config.deterministic()) reference = s.sorted_classes();
    } else if (config.deterministic() &&
               (s.total_weight() != *rec.weight || s.sorted_classes() != reference)) {
      rec.status = RunStatus::Error;
      rec.message = "repetition " + std::to_string(rep) + " differs from repetition 0";
      break;
    }
    rec.times_ns.push_back(elapsed);
  }
  if (rec.status == RunStatus::Ok) {
    rec.median_ns = median_time(rec.times_ns);
  } else {
    rec.weight.reset();
    rec.class_weights.clear();
    rec.times_ns.clear();
  }
  return rec;
}

}  // namespace

std::vector<ExperimentRecord> run_plan(const ExperimentPlan& plan) {
  plan.validate();
  if (plan.pin_cpu && plan.timing) pin_to_current_cpu();

  struct Loaded {
    std::string id;
    std::optional<WeightedGraph> graph;
    std::string error;
  };
  std::vector<Loaded> loaded;
  for (const auto& spec : plan.instances) {
    Loaded l;
    l.id = spec.to_string();
    try {
      l.graph = load_instance(spec);
    } catch (const std::exception& e) {
      l.error = e.what();
    }
    loaded.push_back(std::move(l));
  }

  std::map<std::pair<std::string, int>, Weight> optimum;
  if (plan.oracle) {
    const ExactLimits limits;
    for (const auto& l : loaded) {
      if (!l.graph || l.graph->num_edges() > limits.max_edges) continue;
      for (int k : plan.ks) {
        if (k > limits.max_k) continue;
        try {
          ScopedDeadline deadline(plan.timeout);
          optimum[{l.id, k}] = brute_force_kdjm(*l.graph, k, limits).weight;
        } catch (const TimeoutExpired&) {
        }
      }
    }
  }

  struct Cell {
    std::size_t instance;
    std::size_t algorithm;
    int k;
  };
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < loaded.size(); ++i) {
    for (std::size_t a = 0; a < plan.algorithms.size(); ++a) {
      for (int k : plan.ks) cells.push_back({i, a, k});
    }
  }
  std::vector<ExperimentRecord> records(cells.size());
  auto work = [&](std::size_t idx) {
    const Cell& c = cells[idx];
    const Loaded& l = loaded[c.instance];
    const AlgorithmConfig& cfg = plan.algorithms[c.algorithm];
    if (!l.graph) {
      ExperimentRecord rec;
      rec.instance = l.id;
      rec.algorithm = cfg.name();
      rec.config = cfg.options();
      rec.k = c.k;
      rec.seed = cfg.seed.value_or(plan.seed);
      rec.status = RunStatus::Error;
      rec.message = "cannot load instance: " + l.error;
      records[idx] = std::move(rec);
      return;
    }
    records[idx] = run_cell(*l.graph, l.id, cfg, c.k, plan);
  };

  const int jobs = plan.timing ? 1 : plan.jobs;
  if (jobs <= 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) work(i);
      });
    }
    for (auto& th : pool) th.join();
  }

  std::stable_sort(records.begin(), records.end(), [](const ExperimentRecord& a, const ExperimentRecord& b) {
    return std::tie(a.instance, a.algorithm, a.config, a.k) < std::tie(b.instance, b.algorithm, b.config, b.k);
  });
  compute_relative_quality(records, optimum);
  if (!plan.output.empty()) write_csv(records, plan.output);
  return records;
}

// --- CSV ----------------------------------------------------------------------------

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

/// Splits one record; returns false at end of input.
bool read_csv_row(std::istream& in, std::vector<std::string>& fields) {
  fields.clear();
  if (in.peek() == std::char_traits<char>::eof()) return false;
  std::string field;
  bool quoted = false;
  bool any = false;
  for (;;) {
    const int ch = in.get();
    if (ch == std::char_traits<char>::eof()) {
      if (quoted) throw ParseError("unterminated quoted field", 0);
      if (any || !field.empty()) fields.push_back(field);
      return !fields.empty();
    }
    any = true;
    const char c = static_cast<char>(ch);
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get();
          field += '"';
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c == '\r') {
      if (in.peek() == '\n') in.get();
      fields.push_back(std::move(field));
      return true;
    } else if (c == '\n') {
      fields.push_back(std::move(field));
      return true;
    } else {
      field += c;
    }
  }
}

}  // namespace

void write_csv(const std::vector<ExperimentRecord>& records, std::ostream& out) {
  out << kCsvHeader << "\r\n";
  for (const auto& r : records) {
    out << csv_field(r.instance) << ',' << csv_field(r.algorithm) << ',' << csv_field(r.config)
        << ',' << r.k << ',' << r.seed << ',' << to_string(r.status) << ',';
    if (r.weight) out << *r.weight;
    out << ',';
    if (r.rel_quality) out << format_double(*r.rel_quality);
    for (std::size_t i = 0; i < 3; ++i) {
      out << ',';
      if (i < r.times_ns.size()) out << r.times_ns[i];
    }
    out << ',';
    if (r.median_ns) out << *r.median_ns;
    out << "\r\n";
  }
}

void write_csv(const std::vector<ExperimentRecord>& records, const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path.string() + "' for writing");
  write_csv(records, f);
  f.flush();
  if (!f) throw IoError("failed writing '" + path.string() + "'");
}

std::vector<ExperimentRecord> read_csv(std::istream& in) {
  std::vector<std::string> fields;
  if (!read_csv_row(in, fields)) throw ParseError("missing header", 1);
  std::string header;
  for (std::size_t i = 0; i < fields.size(); ++i) header += (i ? "," : "") + fields[i];
  if (header != kCsvHeader) throw ParseError("unexpected header", 1);
  std::vector<ExperimentRecord> out;
  std::size_t row = 1;
  while (read_csv_row(in, fields)) {
    ++row;
    if (fields.size() == 1 && fields[0].empty()) continue;
    if (fields.size() != 12) throw ParseError("expected 12 fields", row);
    try {
      ExperimentRecord r;
      r.instance = fields[0];
      r.algorithm = fields[1];
      r.config = fields[2];
      r.k = parse_int<int>("k", fields[3]);
      r.seed = parse_int<std::uint64_t>("seed", fields[4]);
      r.status = parse_status(fields[5]);
      if (!fields[6].empty()) r.weight = parse_int<Weight>("weight", fields[6]);
      if (!fields[7].empty()) {
        char* end = nullptr;
        r.rel_quality = std::strtod(fields[7].c_str(), &end);
        if (end != fields[7].c_str() + fields[7].size()) throw std::invalid_argument("bad rel_quality");
      }
      for (int i = 8; i < 11; ++i) {
        if (!fields[static_cast<std::size_t>(i)].empty()) {
          r.times_ns.push_back(parse_int<std::int64_t>("time", fields[static_cast<std::size_t>(i)]));
        }
      }
      if (!fields[11].empty()) r.median_ns = parse_int<std::int64_t>("t_median_ns", fields[11]);
      out.push_back(std::move(r));
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(e.what(), row);
    }
  }
  return out;
}

std::vector<ExperimentRecord> read_csv(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path.string() + "'");
  return read_csv(f);
}

// --- report ----------------------------------------------------------------------------

namespace {

std::string label_of(const ExperimentRecord& r) {
  return r.config.empty() ? r.algorithm : r.algorithm + ":" + r.config;
}

}  // namespace

Report compare_report(const std::vector<ExperimentRecord>& records, const std::string& baseline,
                      int trend_low, int trend_high) {
  Report rep;
  rep.baseline = baseline;
  std::vector<std::string> labels;
  std::map<std::string, std::map<std::pair<std::string, int>, const ExperimentRecord*>> by_label;
  for (const auto& r : records) {
    const std::string label = label_of(r);
    if (!by_label.count(label)) labels.push_back(label);
    by_label[label][{r.instance, r.k}] = &r;
  }
  std::string base_label;
  for (const auto& l : labels) {
    if (l == baseline) base_label = l;
  }
  if (base_label.empty()) {
    for (const auto& l : labels) {
      if (by_label[l].begin()->second->algorithm == baseline) {
        base_label = l;
        break;
      }
    }
  }
  rep.baseline = base_label.empty() ? baseline : base_label;

  auto ok_time = [](const ExperimentRecord* r) -> std::optional<double> {
    if (!r || r->status != RunStatus::Ok || !r->median_ns) return std::nullopt;
    return static_cast<double>(std::max<std::int64_t>(*r->median_ns, 1));
  };

  for (const auto& label : labels) {
    ReportRow row;
    row.label = label;
    const auto& mine = by_label[label];
    if (!base_label.empty()) {
      const auto& base = by_label[base_label];
      double log_sum = 0;
      for (const auto& [cell, r] : mine) {
        const auto it = base.find(cell);
        if (it == base.end()) continue;
        const auto t_base = ok_time(it->second);
        const auto t_own = ok_time(r);
        if (!t_base || !t_own) continue;
        log_sum += std::log(*t_base / *t_own);
        ++row.compared_cells;
      }
      if (row.compared_cells) row.speedup = std::exp(log_sum / static_cast<double>(row.compared_cells));
    }
    std::map<int, std::pair<double, std::size_t>> sums;
    for (const auto& [cell, r] : mine) {
      if (r->status != RunStatus::Ok || !r->rel_quality) continue;
      auto& [sum, count] = sums[cell.second];
      sum += *r->rel_quality;
      ++count;
      auto [it, inserted] = row.min_quality.try_emplace(cell.second, *r->rel_quality);
      if (!inserted) it->second = std::min(it->second, *r->rel_quality);
    }
    for (const auto& [k, sc] : sums) row.mean_quality[k] = sc.first / static_cast<double>(sc.second);
    rep.rows.push_back(std::move(row));

    RuntimeTrend trend;
    trend.label = label;
    trend.k_low = trend_low;
    trend.k_high = trend_high;
    double log_sum = 0;
    std::size_t count = 0;
    for (const auto& [cell, r] : mine) {
      if (cell.second != trend_low) continue;
      const auto hi = mine.find({cell.first, trend_high});
      if (hi == mine.end()) continue;
      const auto t_lo = ok_time(r);
      const auto t_hi = ok_time(hi->second);
      if (!t_lo || !t_hi) continue;
      log_sum += std::log(*t_hi / *t_lo);
      ++count;
    }
    if (count) trend.growth = std::exp(log_sum / static_cast<double>(count));
    rep.trends.push_back(std::move(trend));
  }
  return rep;
}

std::string format_report(const Report& report) {
  std::ostringstream os;
  char buf[256];
  os << "baseline: " << report.baseline << "\n\n";
  os << "algorithm                                    speedup   cells  k: mean quality / min quality\n";
  for (const auto& row : report.rows) {
    std::snprintf(buf, sizeof buf, "%-44s ", row.label.c_str());
    os << buf;
    if (row.speedup) {
      std::snprintf(buf, sizeof buf, "%8.3f", *row.speedup);
    } else {
      std::snprintf(buf, sizeof buf, "%8s", "-");
    }
    os << buf;
    std::snprintf(buf, sizeof buf, " %7zu ", row.compared_cells);
    os << buf;
    for (const auto& [k, mean] : row.mean_quality) {
      std::snprintf(buf, sizeof buf, " k=%d: %.4f/%.4f", k, mean, row.min_quality.at(k));
      os << buf;
    }
    os << '\n';
  }
  if (!report.trends.empty()) {
    os << "\nruntime growth (median time ratio, geometric mean over instances)\n";
    for (const auto& t : report.trends) {
      std::snprintf(buf, sizeof buf, "%-44s k=%d -> k=%d: ", t.label.c_str(), t.k_low, t.k_high);
      os << buf;
      if (t.growth) {
        std::snprintf(buf, sizeof buf, "%.3fx", *t.growth);
        os << buf;
      } else {
        os << '-';
      }
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace kdjm
