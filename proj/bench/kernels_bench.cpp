#include <benchmark/benchmark.h>

#include "coxid/identity.hpp"
#include <vector>

namespace {

coxid::WeightVector fixture(int n) {
    std::vector<long long> entries;
    for (int i = 0; i < n; ++i) entries.push_back(i % 2 ? -(i + 1) / 2 : n - i);
    return coxid::WeightVector::from_integers(entries);
}

template <long long (*Kernel)(const coxid::WeightVector&, const coxid::Caps&)>
void run(benchmark::State& state) {
    const auto lambda = fixture(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(lambda, coxid::Caps{}));
}

}  // namespace

BENCHMARK(run<coxid::s_direct>)->Name("S/parallel")->DenseRange(6, 9)->Unit(benchmark::kMillisecond);
BENCHMARK(run<coxid::s_direct_reference>)->Name("S/serial")->DenseRange(6, 9)->Unit(benchmark::kMillisecond);
BENCHMARK(run<coxid::t_direct>)->Name("T/parallel")->DenseRange(6, 12)->Unit(benchmark::kMillisecond);
BENCHMARK(run<coxid::t_direct_reference>)->Name("T/serial")->DenseRange(6, 12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
