#include <benchmark/benchmark.h>

#include <numeric>
#include <vector>

#include "tkhf/hf.hpp"
#include "tkhf/numtheory.hpp"
#include "tkhf/semigroup.hpp"
#include "tkhf/seifert.hpp"
#include "tkhf/signature.hpp"

using namespace tkhf;

// Size sweeps use powers of two, so b / 2 + 1 is odd and coprime to b.
namespace {

// Pairs (q - 1, q) for the size sweeps.
CoprimePair consecutive(const benchmark::State& state) { return {state.range(0) - 1, state.range(0)}; }

void BM_DedekindSum(benchmark::State& state) {
    const std::int64_t q = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(dedekind_sum(q / 2 + 1, q));
}
BENCHMARK(BM_DedekindSum)->RangeMultiplier(8)->Range(8, 1 << 15);

void BM_SawtoothPartialSum(benchmark::State& state) {
    const std::int64_t b = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(sawtooth_partial_sum(b / 2 + 1, b, 3 * b + 1));
}
BENCHMARK(BM_SawtoothPartialSum)->RangeMultiplier(8)->Range(8, 1 << 15);

void BM_BuildSemigroup(benchmark::State& state) {
    const auto pair = consecutive(state);
    for (auto _ : state) benchmark::DoNotOptimize(build_semigroup(pair));
}
BENCHMARK(BM_BuildSemigroup)->RangeMultiplier(4)->Range(8, 512);

void BM_TauCompact(benchmark::State& state) {
    const auto pair = consecutive(state);
    const auto sd = plus_one_surgery(pair);
    const std::int64_t m = pair.delta() * pair.product();
    for (auto _ : state) benchmark::DoNotOptimize(tau_compact(sd, m));
}
BENCHMARK(BM_TauCompact)->RangeMultiplier(4)->Range(8, 512);

void BM_TauBruteforce(benchmark::State& state) {
    const auto pair = consecutive(state);
    const auto sd = plus_one_surgery(pair);
    const std::int64_t m = pair.delta() * pair.product();
    for (auto _ : state) benchmark::DoNotOptimize(tau_bruteforce(sd, m));
}
BENCHMARK(BM_TauBruteforce)->RangeMultiplier(2)->Range(8, 64);

void BM_TauProfileRecurrence(benchmark::State& state) {
    const auto pair = consecutive(state);
    for (auto _ : state) benchmark::DoNotOptimize(tau_profile(pair));
}
BENCHMARK(BM_TauProfileRecurrence)->RangeMultiplier(4)->Range(8, 512);

void BM_TauProfileBruteforce(benchmark::State& state) {
    const auto pair = consecutive(state);
    for (auto _ : state) benchmark::DoNotOptimize(tau_profile_bruteforce(pair));
}
BENCHMARK(BM_TauProfileBruteforce)->RangeMultiplier(2)->Range(8, 64);

void BM_DViaTau(benchmark::State& state) {
    const auto pair = consecutive(state);
    for (auto _ : state) benchmark::DoNotOptimize(d_via_tau(pair));
}
BENCHMARK(BM_DViaTau)->RangeMultiplier(4)->Range(8, 512);

void BM_DViaDedekind(benchmark::State& state) {
    const auto pair = consecutive(state);
    for (auto _ : state) benchmark::DoNotOptimize(d_via_dedekind(pair));
}
BENCHMARK(BM_DViaDedekind)->RangeMultiplier(4)->Range(8, 512);

void BM_DViaSignature(benchmark::State& state) {
    const auto pair = consecutive(state);
    for (auto _ : state) benchmark::DoNotOptimize(d_via_signature(pair));
}
BENCHMARK(BM_DViaSignature)->RangeMultiplier(4)->Range(8, 512);

void BM_HFPlusOne(benchmark::State& state) {
    const auto pair = consecutive(state);
    for (auto _ : state) benchmark::DoNotOptimize(hf_plus_one(pair));
}
BENCHMARK(BM_HFPlusOne)->RangeMultiplier(4)->Range(8, 512);

void BM_InequalitySuite(benchmark::State& state) {
    const auto pair = consecutive(state);
    for (auto _ : state) benchmark::DoNotOptimize(inequality_suite(pair));
}
BENCHMARK(BM_InequalitySuite)->RangeMultiplier(4)->Range(8, 128);

}  // namespace

BENCHMARK_MAIN();
