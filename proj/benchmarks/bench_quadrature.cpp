#include <benchmark/benchmark.h>

#include "bergtoep/quadrature.hpp"

using namespace bergtoep;

static void RadialClosedForm(benchmark::State& state) {
    RadialIntegrand ig;
    ig.exponents = {3, 5};
    ig.power = 12;
    ig.radial = QuasiRadialSymbol::inverse_power(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(radial_integral(ig));
    }
}
BENCHMARK(RadialClosedForm);

static void RadialNumericCascade(benchmark::State& state) {
    RadialIntegrand ig;
    ig.exponents = {3, 5, 1, 1};
    ig.power = 14;
    for (auto _ : state) {
        benchmark::DoNotOptimize(radial_integral_numeric(ig));
    }
}
BENCHMARK(RadialNumericCascade);

static void RadialTensor(benchmark::State& state) {
    RadialIntegrand ig;
    ig.exponents = {3, 5};
    ig.power = 12;
    for (auto _ : state) {
        benchmark::DoNotOptimize(radial_integral_tensor(ig, QuadratureSpec{
                                                                static_cast<int>(state.range(0))}));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(RadialTensor)->RangeMultiplier(2)->Range(20, 160)->Complexity();
