#include "comblock/comblock.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace comblock;

static void BM_CountUnlocking(benchmark::State& state) {
    const LockConfig cfg;
    const int length = static_cast<int>(state.range(0));
    const unsigned workers = static_cast<unsigned>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(count_unlocking(cfg, length, {workers}).unlocking);
}
BENCHMARK(BM_CountUnlocking)->ArgsProduct({{5, 6, 7}, {1, 4}})->Unit(benchmark::kMillisecond);

static std::vector<KeyId> random_keys(std::size_t n) {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> digit(0, 9);
    std::vector<KeyId> keys;
    keys.reserve(n);
    for (std::size_t i = 0; i < n; ++i) keys.emplace_back(digit(rng));
    return keys;
}

static void BM_RunSequence(benchmark::State& state) {
    const LockConfig cfg;
    const auto keys = random_keys(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(run_sequence(cfg, keys));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RunSequence)->Arg(64)->Arg(4096);

static void BM_RunScenario(benchmark::State& state) {
    const LockConfig cfg;
    const auto keys = random_keys(static_cast<std::size_t>(state.range(0)));
    std::vector<KeyEvent> events;
    Millis t{0};
    for (KeyId k : keys) {
        events.push_back({t, k});
        t += Millis(250);
    }
    for (auto _ : state) benchmark::DoNotOptimize(run_scenario(cfg, events, t + Millis(10000)));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RunScenario)->Arg(64)->Arg(4096);
BENCHMARK_MAIN();
