#include <benchmark/benchmark.h>

#include "unicay/coherent.hpp"
#include "unicay/spectra.hpp"

using namespace unicay;

namespace {

DenseGraph x_graph(std::int64_t n) {
    return materialize(unitary_connection_set(n, n));
}

void BM_UnitarySpectrum(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(unitary_spectrum(n));
}

void BM_OracleCharPoly(benchmark::State& state) {
    const DenseGraph g = x_graph(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(oracle_char_poly(g));
}

void BM_OracleDeterminant(benchmark::State& state) {
    const DenseGraph g = x_graph(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(oracle_determinant(g));
}

void BM_WlClosure(benchmark::State& state) {
    const DenseGraph g = x_graph(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(wl_closure(g));
}

void BM_MinPolyAnnihilates(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    const DenseGraph g = x_graph(n);
    const IntPoly m = minimal_polynomial(n);
    for (auto _ : state) benchmark::DoNotOptimize(annihilates(m, g));
}

}  // namespace

BENCHMARK(BM_UnitarySpectrum)->Arg(60)->Arg(5040)->Arg(720720);
BENCHMARK(BM_OracleCharPoly)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_OracleDeterminant)->Arg(64)->Arg(128);
BENCHMARK(BM_WlClosure)->Arg(32)->Arg(64)->Arg(128);
BENCHMARK(BM_MinPolyAnnihilates)->Arg(32)->Arg(64);
