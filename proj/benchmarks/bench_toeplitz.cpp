#include <benchmark/benchmark.h>

#include "bergtoep/toeplitz.hpp"

using namespace bergtoep;

static void AssembleQuasiRadial(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const Partition k({2, 2});
    const BergmanSpace sp(4, m);
    const auto a = QuasiRadialSymbol::inverse_power(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(assemble_quasi_radial(a, k, sp));
    }
    state.SetComplexityN(static_cast<std::int64_t>(sp.dim()));
}
BENCHMARK(AssembleQuasiRadial)->DenseRange(2, 6, 2)->Complexity();

static void AssembleQuasiHomogeneous(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const Partition k({2, 2});
    const BergmanSpace sp(4, m);
    const QuasiHomogeneousSymbol sym(QuasiRadialSymbol::inverse_power(1),
                                     MultiIndex({1, 0, 1, 0}), MultiIndex({0, 1, 0, 1}));
    for (auto _ : state) {
        benchmark::DoNotOptimize(assemble_quasi_homogeneous(sym, k, sp));
    }
}
BENCHMARK(AssembleQuasiHomogeneous)->DenseRange(2, 6, 2);

static void CommutatorNorm(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const Partition k({2, 2});
    const BergmanSpace sp(4, m);
    const OperatorMatrix a = assemble_quasi_radial(QuasiRadialSymbol::inverse_power(1), k, sp);
    const OperatorMatrix b =
        assemble(QuasiHomogeneousSymbol(QuasiRadialSymbol::constant(1.0), MultiIndex({1, 0, 1, 0}),
                                        MultiIndex({0, 1, 0, 1})),
                 k, sp);
    for (auto _ : state) {
        benchmark::DoNotOptimize(commutator_norm(a, b));
    }
}
BENCHMARK(CommutatorNorm)->DenseRange(2, 6, 2);
