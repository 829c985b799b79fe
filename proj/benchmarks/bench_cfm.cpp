#include <benchmark/benchmark.h>

#include <random>

#include "cfm/conflict.hpp"
#include "cfm/lattice.hpp"
#include "cfm/scenarios.hpp"
#include "cfm/stream.hpp"

namespace {

cfm::EvidenceSet random_evidence(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> endpoint(0.0, 100.0);
    std::vector<cfm::Source> raw;
    for (int id = 1; id <= n; ++id) {
        const double a = endpoint(rng);
        const double b = endpoint(rng);
        raw.push_back({id, {std::min(a, b), std::max(a, b)}});
    }
    return cfm::validate_evidence(raw);
}

void BM_Conflict(benchmark::State& state) {
    const cfm::EvidenceSet ev = random_evidence(static_cast<int>(state.range(0)), 99);
    const cfm::SourceSubset all = ev.all();
    for (auto _ : state) benchmark::DoNotOptimize(cfm::conflict(ev, all));
}
BENCHMARK(BM_Conflict)->Arg(4)->Arg(8)->Arg(16);

void BM_FullLattice(benchmark::State& state) {
    const cfm::EvidenceSet ev = random_evidence(static_cast<int>(state.range(0)), 123);
    for (auto _ : state) benchmark::DoNotOptimize(cfm::full_lattice(ev));
}
BENCHMARK(BM_FullLattice)->Arg(8)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_GridOracle(benchmark::State& state) {
    const cfm::EvidenceSet ev = random_evidence(6, 7);
    const cfm::SourceSubset all = ev.all();
    for (auto _ : state)
        benchmark::DoNotOptimize(cfm::grid_oracle(ev, all, state.range(0)));
}
BENCHMARK(BM_GridOracle)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_ConflictSeries(benchmark::State& state) {
    cfm::DriftScenarioConfig cfg;
    cfg.duration_samples = static_cast<int>(state.range(0));
    cfg.drift_start = cfg.duration_samples / 3;
    cfg.drift_end = 2 * cfg.duration_samples / 3;
    const cfm::SensorSeries series = cfm::gen_drift(cfg);
    cfm::WindowConfig wcfg;
    wcfg.window_len = 5;
    wcfg.subset = cfm::SourceSubset::full(cfg.n_sensors);
    for (auto _ : state) benchmark::DoNotOptimize(cfm::conflict_series(series, wcfg));
}
BENCHMARK(BM_ConflictSeries)->Arg(90)->Arg(10'000)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
