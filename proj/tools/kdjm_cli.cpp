// kdjm: run experiment plans, generate instances, solve small instances
// exactly and summarize result files.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kdjm/exact.hpp"
#include "kdjm/experiment.hpp"
#include "kdjm/instances.hpp"

namespace {

struct RunOptions {
  std::string plan_file;
  std::vector<std::string> instances;
  std::vector<std::string> algorithms;
  std::vector<int> ks;
  int reps = 0;
  std::string timeout;
  std::optional<std::uint64_t> seed;
  std::string out;
  bool oracle = false;
  bool no_timing = false;
  int jobs = 0;
  bool pin = false;
  bool report = false;
  std::string baseline = "greedy_it";
};

int cmd_run(const RunOptions& o) {
  kdjm::ExperimentPlan plan;
  if (!o.plan_file.empty()) plan = kdjm::ExperimentPlan::parse_file(o.plan_file);
  for (const auto& s : o.instances) plan.instances.push_back(kdjm::InstanceSpec::parse(s));
  for (const auto& a : o.algorithms) plan.algorithms.push_back(kdjm::AlgorithmConfig::parse(a));
  if (!o.ks.empty()) plan.ks = o.ks;
  if (o.reps) plan.repetitions = o.reps;
  if (!o.timeout.empty()) plan.timeout = kdjm::parse_duration(o.timeout);
  if (o.seed) plan.seed = *o.seed;
  if (!o.out.empty()) plan.output = o.out;
  if (o.oracle) plan.oracle = true;
  if (o.no_timing) plan.timing = false;
  if (o.jobs) plan.jobs = o.jobs;
  if (o.pin) plan.pin_cpu = true;

  const auto records = kdjm::run_plan(plan);
  if (plan.output.empty()) kdjm::write_csv(records, std::cout);

  int errors = 0;
  for (const auto& r : records) {
    if (r.status == kdjm::RunStatus::Ok) continue;
    std::cerr << kdjm::to_string(r.status) << ": " << r.instance << " " << r.algorithm;
    if (!r.config.empty()) std::cerr << ":" << r.config;
    std::cerr << " k=" << r.k << ": " << r.message << "\n";
    if (r.status == kdjm::RunStatus::Error) ++errors;
  }
  if (o.report) {
    std::ostream& os = plan.output.empty() ? std::cerr : std::cout;
    os << kdjm::format_report(kdjm::compare_report(records, o.baseline));
  }
  return errors ? 1 : 0;
}

int cmd_gen(const std::string& spec_text, const std::string& out) {
  const auto spec = kdjm::InstanceSpec::parse(spec_text);
  const auto g = kdjm::load_instance(spec);
  if (out.empty() || out == "-") {
    kdjm::write_edge_list(g, std::cout);
  } else {
    kdjm::write_edge_list(g, std::filesystem::path(out));
  }
  std::fprintf(stderr, "%s: n=%zu m=%zu max_degree=%zu max_demand=%llu\n", spec.to_string().c_str(),
               g.num_vertices(), g.num_edges(), g.max_degree(),
               static_cast<unsigned long long>(g.max_demand()));
  return 0;
}

int cmd_exact(const std::string& spec_text, int k, const std::string& ilp, bool ilp_only,
              const kdjm::ExactLimits& limits) {
  const auto g = kdjm::load_instance(kdjm::InstanceSpec::parse(spec_text));
  if (!ilp.empty()) {
    if (ilp == "-") {
      kdjm::export_ilp(g, k, std::cout);
    } else {
      kdjm::export_ilp(g, k, std::filesystem::path(ilp));
    }
  }
  if (ilp_only) return 0;
  const auto result = kdjm::brute_force_kdjm(g, k, limits);
  std::ostream& os = ilp == "-" ? std::cerr : std::cout;
  os << "weight " << result.weight << "\nexplored " << result.explored << "\n";
  const auto classes = result.solution.sorted_classes();
  for (int c = 0; c < k; ++c) {
    os << "class " << c << " (" << result.solution.class_weight(c) << "):";
    for (auto e : classes[static_cast<std::size_t>(c)]) {
      const auto& ed = g.edge(e);
      os << " " << ed.u << "-" << ed.v;
    }
    os << "\n";
  }
  return 0;
}

int cmd_report(const std::string& csv, const std::string& baseline, int low, int high) {
  const auto records = kdjm::read_csv(std::filesystem::path(csv));
  std::cout << kdjm::format_report(kdjm::compare_report(records, baseline, low, high));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-disjoint matching heuristics and experiment runner"};
  app.require_subcommand(1);

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "Run an experiment plan");
  run_cmd->add_option("--plan", run.plan_file, "Plan file with key=value lines")->check(CLI::ExistingFile);
  run_cmd->add_option("--instance", run.instances, "Instance spec, e.g. kind=rmat,x=10,seed=1");
  run_cmd->add_option("--alg", run.algorithms, "Algorithm config, e.g. k_ec:flags=CC+RL");
  run_cmd->add_option("--k", run.ks, "k values")->delimiter(',');
  run_cmd->add_option("--reps", run.reps, "Repetitions per cell (odd)");
  run_cmd->add_option("--timeout", run.timeout, "Per-repetition timeout, e.g. 30s or 4h");
  run_cmd->add_option("--seed", run.seed, "Base seed");
  run_cmd->add_option("--out", run.out, "CSV output path (stdout when omitted)");
  run_cmd->add_flag("--oracle", run.oracle, "Use the exact solver for OPT on small instances");
  run_cmd->add_flag("--no-timing", run.no_timing, "Skip timing and allow parallel cells");
  run_cmd->add_option("--jobs", run.jobs, "Worker threads when timing is off");
  run_cmd->add_flag("--pin", run.pin, "Pin the runner to one CPU while timing");
  run_cmd->add_flag("--report", run.report, "Print a summary after the run");
  run_cmd->add_option("--baseline", run.baseline, "Baseline algorithm for the summary");

  std::string gen_spec;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Generate or convert an instance to an edge list");
  gen_cmd->add_option("spec", gen_spec, "Instance spec")->required();
  gen_cmd->add_option("-o,--out", gen_out, "Output path (stdout when omitted)");

  std::string exact_spec;
  int exact_k = 1;
  std::string exact_ilp;
  bool exact_ilp_only = false;
  kdjm::ExactLimits limits;
  auto* exact_cmd = app.add_subcommand("exact", "Exact optimum of a small instance, or ILP export");
  exact_cmd->add_option("spec", exact_spec, "Instance spec")->required();
  exact_cmd->add_option("--k", exact_k, "Number of matchings")->check(CLI::PositiveNumber);
  exact_cmd->add_option("--ilp", exact_ilp, "Write the LP model to this path ('-' for stdout)");
  exact_cmd->add_flag("--ilp-only", exact_ilp_only, "Only export, do not solve");
  exact_cmd->add_option("--max-edges", limits.max_edges, "Edge limit for the exact solver");
  exact_cmd->add_option("--max-k", limits.max_k, "k limit for the exact solver");

  std::string report_csv;
  std::string report_baseline = "greedy_it";
  int trend_low = 2;
  int trend_high = 16;
  auto* report_cmd = app.add_subcommand("report", "Summarize a result CSV");
  report_cmd->add_option("csv", report_csv, "Result file")->required()->check(CLI::ExistingFile);
  report_cmd->add_option("--baseline", report_baseline, "Baseline algorithm");
  report_cmd->add_option("--trend-low", trend_low, "Lower k for runtime growth");
  report_cmd->add_option("--trend-high", trend_high, "Upper k for runtime growth");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) return cmd_run(run);
    if (*gen_cmd) return cmd_gen(gen_spec, gen_out);
    if (*exact_cmd) return cmd_exact(exact_spec, exact_k, exact_ilp, exact_ilp_only, limits);
    if (*report_cmd) return cmd_report(report_csv, report_baseline, trend_low, trend_high);
  } catch (const std::exception& e) {
    std::cerr << "kdjm: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
