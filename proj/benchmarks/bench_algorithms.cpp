// Micro benchmarks for the matching heuristics on RMAT instances.

#include <benchmark/benchmark.h>

#include <map>
#include <string>

#include "kdjm/algorithm.hpp"
#include "kdjm/blossom.hpp"
#include "kdjm/instances.hpp"
#include "kdjm/kec.hpp"

namespace {

using namespace kdjm;

const WeightedGraph& rmat(unsigned scale) {
  static std::map<unsigned, WeightedGraph> cache;
  auto it = cache.find(scale);
  if (it == cache.end()) it = cache.emplace(scale, gen_rmat({.scale = scale, .seed = 1})).first;
  return it->second;
}

void set_counters(benchmark::State& state, const WeightedGraph& g) {
  state.counters["edges"] = static_cast<double>(g.num_edges());
  state.counters["edges_per_s"] = benchmark::Counter(
      static_cast<double>(g.num_edges()) * static_cast<double>(state.iterations()), benchmark::Counter::kIsRate);
}

void run_config(benchmark::State& state, const char* config) {
  const auto& g = rmat(static_cast<unsigned>(state.range(0)));
  const int k = static_cast<int>(state.range(1));
  const auto cfg = AlgorithmConfig::parse(config);
  Weight w = 0;
  for (auto _ : state) {
    auto s = run_algorithm(g, k, cfg);
    benchmark::DoNotOptimize(w = s.total_weight());
  }
  state.counters["weight"] = static_cast<double>(w);
  set_counters(state, g);
}

void args(benchmark::internal::Benchmark* b) {
  for (int scale : {8, 10, 12}) {
    for (int k : {2, 8, 32}) b->Args({scale, k});
  }
  b->ArgNames({"scale", "k"})->Unit(benchmark::kMillisecond);
}

void BM_GreedyIt(benchmark::State& s) { run_config(s, "greedy_it"); }
void BM_GpaItLocal(benchmark::State& s) { run_config(s, "gpa_it:post=local"); }
void BM_BlossomIt(benchmark::State& s) { run_config(s, "blossom_it"); }
void BM_BGreedyExtend(benchmark::State& s) { run_config(s, "bgreedy_extend"); }
void BM_NodeCentered(benchmark::State& s) { run_config(s, "node_centered:rating=ksum,theta=1/5"); }
void BM_KEc(benchmark::State& s) { run_config(s, "k_ec:flags=CC+RL"); }
void BM_GreedyItRoma(benchmark::State& s) { run_config(s, "greedy_it:post=roma,seed=1"); }

BENCHMARK(BM_GreedyIt)->Apply(args);
BENCHMARK(BM_GpaItLocal)->Apply(args);
BENCHMARK(BM_BlossomIt)->Apply(args);
BENCHMARK(BM_BGreedyExtend)->Apply(args);
BENCHMARK(BM_NodeCentered)->Apply(args);
BENCHMARK(BM_KEc)->Apply(args);
BENCHMARK(BM_GreedyItRoma)->Apply(args);

void BM_MaxWeightMatching(benchmark::State& state) {
  const auto& g = rmat(static_cast<unsigned>(state.range(0)));
  const auto start = state.range(1) != 0 ? BlossomStart::Fractional : BlossomStart::Empty;
  for (auto _ : state) benchmark::DoNotOptimize(blossom_max_weight_matching(g, start).weight);
  set_counters(state, g);
}
BENCHMARK(BM_MaxWeightMatching)
    ->ArgsProduct({{8, 10, 12}, {0, 1}})
    ->ArgNames({"scale", "fractional"})
    ->Unit(benchmark::kMillisecond);

void BM_MisraGries(benchmark::State& state) {
  const auto& g = rmat(static_cast<unsigned>(state.range(0)));
  const int k = static_cast<int>(g.max_degree()) + 1;
  for (auto _ : state) benchmark::DoNotOptimize(k_ec(g, k, KecFlags::none()).total_weight());
  set_counters(state, g);
}
BENCHMARK(BM_MisraGries)->Arg(8)->Arg(10)->Arg(12)->ArgName("scale")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
