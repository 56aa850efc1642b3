#include <benchmark/benchmark.h>

#include "tlab/apollonian.hpp"
#include "tlab/chromatic.hpp"
#include "tlab/colouring.hpp"
#include "tlab/constructions.hpp"
#include "tlab/graph.hpp"
#include "tlab/packing_gen.hpp"

namespace {

tlab::Configuration packing(int dimension, int n) {
    const tlab::GeneratorParams params{dimension, n, 42, tlab::RadiusLaw::uniform(0.5, 2.0),
                                       10'000, 1e-9};
    return tlab::random_tangent_packing(params).configuration;
}

void BM_RandomTangentPacking(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(packing(3, n));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RandomTangentPacking)->Range(64, 1024)->Complexity();

void BM_BuildGraphPairScan(benchmark::State& state) {
    const tlab::Configuration cfg = packing(3, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(tlab::build_graph(cfg));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildGraphPairScan)->Range(64, 1024)->Complexity();

void BM_ValidateGasketExact(benchmark::State& state) {
    const tlab::GasketResult gasket =
        tlab::apollonian_gasket({-1, 2, 2, 3}, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(tlab::validate_configuration(gasket.configuration));
    }
}
BENCHMARK(BM_ValidateGasketExact)->DenseRange(3, 5);

void BM_DsaturKissing8(benchmark::State& state) {
    const tlab::TangencyGraph g = tlab::build_graph(tlab::kissing_configuration(8));
    for (auto _ : state) {
        benchmark::DoNotOptimize(tlab::dsatur(g));
    }
}
BENCHMARK(BM_DsaturKissing8);

void BM_ExactChromaticKissing3(benchmark::State& state) {
    const tlab::TangencyGraph g = tlab::build_graph(tlab::kissing_configuration(3));
    for (auto _ : state) {
        benchmark::DoNotOptimize(tlab::chromatic_number(g));
    }
}
BENCHMARK(BM_ExactChromaticKissing3);

} // namespace

BENCHMARK_MAIN();
