// Serial vs OpenMP sweeps, production battle runner vs brute force.

#include <benchmark/benchmark.h>

#include "wormlab/battle.hpp"
#include "wormlab/lemma_lab.hpp"

using namespace wormlab;

namespace {

void sweep_with(benchmark::State& state, const char* suite, ExecutionPolicy policy) {
  const auto count = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep(suite, count, 42, Budget{}, policy));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * count));
}

void BM_StepdownSerial(benchmark::State& s) { sweep_with(s, "stepdown", ExecutionPolicy::serial); }
void BM_StepdownParallel(benchmark::State& s) { sweep_with(s, "stepdown", ExecutionPolicy::parallel); }
void BM_NormStepSerial(benchmark::State& s) { sweep_with(s, "norm_step", ExecutionPolicy::serial); }
void BM_NormStepParallel(benchmark::State& s) { sweep_with(s, "norm_step", ExecutionPolicy::parallel); }
void BM_BridgeSerial(benchmark::State& s) { sweep_with(s, "bridge", ExecutionPolicy::serial); }
void BM_BridgeParallel(benchmark::State& s) { sweep_with(s, "bridge", ExecutionPolicy::parallel); }

void battle_runner(benchmark::State& state, bool record) {
  const Worm a = Worm::of({static_cast<std::uint64_t>(state.range(0))});
  Budget b;
  b.max_steps = 20'000;
  b.max_term_size = 4096;
  BattleOptions options;
  options.record = record;
  for (auto _ : state) benchmark::DoNotOptimize(run_brackets(a, 1, b, options));
}

void BM_BattleRunner(benchmark::State& s) { battle_runner(s, false); }
void BM_BattleRunnerRecorded(benchmark::State& s) { battle_runner(s, true); }

void BM_BattleBruteForce(benchmark::State& state) {
  const Worm a = Worm::of({static_cast<std::uint64_t>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_battle(a, 1, 20'000, 4096));
}

}  // namespace

BENCHMARK(BM_StepdownSerial)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StepdownParallel)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NormStepSerial)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NormStepParallel)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BridgeSerial)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BridgeParallel)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BattleRunner)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_BattleRunnerRecorded)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_BattleBruteForce)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
