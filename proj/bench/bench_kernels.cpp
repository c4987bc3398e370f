#include "hfactor/corpus.hpp"
#include "hfactor/diagnostics.hpp"
#include "hfactor/random_models.hpp"
#include "hfactor/threshold.hpp"

#include <benchmark/benchmark.h>

using namespace hfactor;

static void BM_GnpSerial(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_gnp(n, 0.1, seed++));
}
BENCHMARK(BM_GnpSerial)->Arg(500)->Arg(2000);

static void BM_GnpParallel(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_gnp_parallel(n, 0.1, seed++));
}
BENCHMARK(BM_GnpParallel)->Arg(500)->Arg(2000);

static HostGraph weight_host()
{
    return sample_partitioned(corpus_pattern("k3"), 4, 0.8, 7);
}

static void BM_WeightTableSerial(benchmark::State& state)
{
    auto host = weight_host();
    auto h = corpus_pattern("k3");
    for (auto _ : state)
        benchmark::DoNotOptimize(weight_table(host, h));
}
BENCHMARK(BM_WeightTableSerial);

static void BM_WeightTableParallel(benchmark::State& state)
{
    auto host = weight_host();
    auto h = corpus_pattern("k3");
    for (auto _ : state)
        benchmark::DoNotOptimize(weight_table_parallel(host, h));
}
BENCHMARK(BM_WeightTableParallel);

static void run_trials(benchmark::State& state, bool parallel)
{
    SimulationSpec spec;
    spec.pattern = corpus_pattern("k3");
    spec.trials = 200;
    spec.master_seed = 3;
    spec.parallel = parallel;
    for (auto _ : state)
        benchmark::DoNotOptimize(estimate_success_prob(spec, 15, 0.35));
}

static void BM_TrialsSerial(benchmark::State& state)
{
    run_trials(state, false);
}
BENCHMARK(BM_TrialsSerial);

static void BM_TrialsParallel(benchmark::State& state)
{
    run_trials(state, true);
}
BENCHMARK(BM_TrialsParallel);

BENCHMARK_MAIN();
