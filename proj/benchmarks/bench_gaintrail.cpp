#include <benchmark/benchmark.h>

#include "gaintrail/brute.hpp"
#include "gaintrail/decide.hpp"
#include "gaintrail/oracle.hpp"
#include "gaintrail/witness.hpp"

using namespace gaintrail;

namespace {

RandomInstance instance_of_size(std::size_t edges) {
  RandomParams p;
  p.vertices = 2 + edges / 4;
  p.edges = edges;
  p.generators = 2;
  p.max_label_length = 2;
  return random_instance(edges * 7919, p);
}

void BM_FindTrail(benchmark::State& state) {
  RandomInstance inst = instance_of_size(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_trail(inst.graph, inst.a, inst.b));
  }
}
BENCHMARK(BM_FindTrail)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_NormalizedShifting(benchmark::State& state) {
  RandomInstance inst = instance_of_size(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(normalized_shifting(inst.graph, inst.a));
  }
}
BENCHMARK(BM_NormalizedShifting)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_Decide(benchmark::State& state) {
  RandomInstance inst = instance_of_size(static_cast<std::size_t>(state.range(0)));
  auto oracle = make_oracle("sym 3 gens r=(1 2 3);t=(1 2)");
  for (auto _ : state) {
    benchmark::DoNotOptimize(decide(inst.graph, *oracle, inst.a, inst.b));
  }
  state.counters["oracle_queries"] =
      static_cast<double>(oracle->stats().query_count) / static_cast<double>(state.iterations());
}
BENCHMARK(BM_Decide)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_FindWitness(benchmark::State& state) {
  // A bundle with one order-3 twist: the canonical small no-instance.
  LabeledGraph g;
  std::size_t edges = static_cast<std::size_t>(state.range(0));
  for (std::size_t i = 1; i <= edges; ++i) {
    g.add_edge("e" + std::to_string(i), "x", "y", i == edges ? make_word({+1}) : Word{});
  }
  auto oracle = make_oracle("sym 3 gens r=(1 2 3);t=(1 2)");
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_witness(g, *oracle, "x", "y"));
  }
}
BENCHMARK(BM_FindWitness)->Arg(3)->Arg(5)->Arg(7);

void BM_OracleIdentity(benchmark::State& state) {
  auto oracle = make_oracle("sym 3 gens r=(1 2 3);t=(1 2)");
  Word w;
  for (int i = 0; i < state.range(0); ++i) w.push(Symbol{static_cast<std::uint32_t>(i % 2 + 1), i % 3 == 0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle->is_identity(w));
  }
}
BENCHMARK(BM_OracleIdentity)->Arg(16)->Arg(256)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
