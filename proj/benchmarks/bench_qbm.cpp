#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "qbm/bath_suite.hpp"
#include "qbm/discrete_bath.hpp"
#include "qbm/drude.hpp"
#include "qbm/quadrature.hpp"
#include "qbm/thermo.hpp"

namespace {

void BM_SemiInfiniteQuadrature(benchmark::State& state) {
    const auto f = [](double x) { return 1.0 / (1.0 + x * x * x * x); };
    for (auto _ : state) benchmark::DoNotOptimize(qbm::integrate_semi_infinite(f).value);
}
BENCHMARK(BM_SemiInfiniteQuadrature);

void BM_KExponential(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(qbm::k_exponential(1.0, 5.0, 2.0));
}
BENCHMARK(BM_KExponential);

void BM_KDrudeClosed(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(qbm::k_drude_closed(1.0, 5.0, 1.0));
}
BENCHMARK(BM_KDrudeClosed);

void BM_KExtendedDrude2Closed(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(qbm::k_extended_drude2_closed(1.0, 5.0, 1.5));
}
BENCHMARK(BM_KExtendedDrude2Closed);

void BM_KContGeneric(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(qbm::k_cont(qbm::Drude{1.0, 5.0}, 1.0).value);
}
BENCHMARK(BM_KContGeneric);

void BM_NormalModes(benchmark::State& state) {
    std::mt19937_64 rng(42);
    const auto bath = qbm::random_bath(static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(qbm::normal_modes(bath).omega_bar.data());
}
BENCHMARK(BM_NormalModes)->Arg(1)->Arg(8)->Arg(64);

void BM_SecondLaw(benchmark::State& state) {
    std::mt19937_64 rng(42);
    const auto bath = qbm::random_bath(static_cast<std::size_t>(state.range(0)), rng);
    const auto modes = qbm::normal_modes(bath);
    for (auto _ : state) benchmark::DoNotOptimize(qbm::k_second_law(bath, modes).K);
}
BENCHMARK(BM_SecondLaw)->Arg(8)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
