#include <benchmark/benchmark.h>

#include <random>

#include "consensus/ahp.hpp"
#include "consensus/homogeneity.hpp"
#include "generators.hpp"

using namespace consensus;

namespace {

DecisionSession session_of(std::size_t participants, std::size_t alternatives) {
    std::mt19937_64 rng(participants * 31 + alternatives);
    return testgen::make_session(testgen::raw_session(rng, participants, alternatives));
}

void BM_AnalyzeSession(benchmark::State& state) {
    const auto s = session_of(static_cast<std::size_t>(state.range(0)), 9);
    for (auto _ : state) benchmark::DoNotOptimize(analyze_session(s));
}
BENCHMARK(BM_AnalyzeSession)->Arg(3)->Arg(8)->Arg(32)->Arg(128);

void BM_Pairwise(benchmark::State& state) {
    const auto s = session_of(static_cast<std::size_t>(state.range(0)), 9);
    for (auto _ : state) benchmark::DoNotOptimize(pairwise_homogeneity(s));
}
BENCHMARK(BM_Pairwise)->Arg(3)->Arg(8)->Arg(32)->UseRealTime();

void BM_DerivePriorities(benchmark::State& state) {
    std::mt19937_64 rng(5);
    auto rows = testgen::consistent_matrix(testgen::random_weights(rng, static_cast<std::size_t>(state.range(0))));
    rows[0][1] *= 1.5;
    rows[1][0] = 1.0 / rows[0][1];
    const ComparisonMatrix m(rows);
    AhpConfig cfg;
    cfg.derivation = state.range(1) ? DerivationMethod::GeometricMean : DerivationMethod::PrincipalEigenvector;
    for (auto _ : state) benchmark::DoNotOptimize(derive_priorities(m, cfg));
}
BENCHMARK(BM_DerivePriorities)->ArgsProduct({{3, 6, 10}, {0, 1}});

}  // namespace
BENCHMARK_MAIN();
