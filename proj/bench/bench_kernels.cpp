// Serial reference versus OpenMP kernels. Laws are warmed up front so both
// variants read the same memo table.

#include <benchmark/benchmark.h>

#include "exhd/characterization.hpp"
#include "exhd/urn.hpp"
#include "exhd/weak_independence.hpp"

using namespace exhd;

namespace {

ExchangeableLaw hls4() {
    auto law = ExchangeableLaw::hls(4, Rational(1), Rational(2), {Rational(1, 4), Rational(1, 4)});
    law.warm(12);
    return law;
}

ExchangeableLaw mixture() {
    auto law = ExchangeableLaw::mixture({Rational(1, 2), Rational(1, 2)},
                                        {{Rational(1, 2), Rational(1, 4), Rational(1, 4)},
                                         {Rational(1, 4), Rational(1, 4), Rational(1, 2)}});
    law.warm(12);
    return law;
}

void BM_verify_serial(benchmark::State& state) {
    const auto law = hls4();
    for (auto _ : state) benchmark::DoNotOptimize(verify_hd_serial(law, static_cast<int>(state.range(0))));
}

void BM_verify_parallel(benchmark::State& state) {
    const auto law = hls4();
    for (auto _ : state) benchmark::DoNotOptimize(verify_hd(law, static_cast<int>(state.range(0))));
}

void BM_oracle_serial(benchmark::State& state) {
    const auto law = mixture();
    for (auto _ : state) benchmark::DoNotOptimize(weak_independence_oracle_serial(law, static_cast<int>(state.range(0))));
}

void BM_oracle_parallel(benchmark::State& state) {
    const auto law = mixture();
    for (auto _ : state) benchmark::DoNotOptimize(weak_independence_oracle(law, static_cast<int>(state.range(0))));
}

void BM_urn_serial(benchmark::State& state) {
    const UrnState init({1, 1, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(empirical_cylinder_serial(init, HlsUrn{{Rational(1, 2)}}, 3,
                                                           static_cast<std::uint64_t>(state.range(0)), 7));
}

void BM_urn_parallel(benchmark::State& state) {
    const UrnState init({1, 1, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(
            empirical_cylinder(init, HlsUrn{{Rational(1, 2)}}, 3, static_cast<std::uint64_t>(state.range(0)), 7));
}

}  // namespace

BENCHMARK(BM_verify_serial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_parallel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_oracle_serial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_oracle_parallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_urn_serial)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_urn_parallel)->Arg(20000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
