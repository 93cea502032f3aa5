#include "wzpi/catalog.hpp"
#include "wzpi/sums.hpp"
#include "wzpi/telescope.hpp"

#include <benchmark/benchmark.h>

using namespace wzpi;

namespace {

constexpr long kHi = 40;

const HyperTerm& kernel() { return find_task("example-2")->left; }

const Telescoper& telescoper() {
    static const Telescoper t = *find_telescoper(kernel(), Var::N, Var::K, 6);
    return t;
}

const std::vector<RatFunc>& values() {
    static const std::vector<RatFunc> v = terminating_sums_serial(kernel(), 0, kHi + telescoper().order);
    return v;
}

void BM_TerminatingSums(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(terminating_sums(kernel(), 0, kHi));
}

void BM_TerminatingSumsSerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(terminating_sums_serial(kernel(), 0, kHi));
}

void BM_RecurrenceResiduals(benchmark::State& state) {
    const auto& t = telescoper();
    const auto& v = values();
    for (auto _ : state) benchmark::DoNotOptimize(recurrence_residuals(t.coeffs, v, 0, kHi + 1));
}

void BM_RecurrenceResidualsSerial(benchmark::State& state) {
    const auto& t = telescoper();
    const auto& v = values();
    for (auto _ : state) benchmark::DoNotOptimize(recurrence_residuals_serial(t.coeffs, v, 0, kHi + 1));
}

} // namespace

BENCHMARK(BM_TerminatingSums)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TerminatingSumsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RecurrenceResiduals)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RecurrenceResidualsSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
