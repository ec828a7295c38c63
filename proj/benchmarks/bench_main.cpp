#include <sdosm/cases.hpp>

#include <benchmark/benchmark.h>

#include <cmath>

namespace {

using namespace sdosm;

double mesh_size(const benchmark::State& state) { return std::ldexp(1.0, -static_cast<int>(state.range(0))); }

// Assembly and factorization of both subdomain problems.
void BM_SubdomainSetup(benchmark::State& state) {
    const auto tc = test1(table1_kappa, table1_epsilon, mesh_size(state));
    for (auto _ : state) {
        SubdomainSystems sys(tc.problem);
        benchmark::DoNotOptimize(&sys);
    }
}
BENCHMARK(BM_SubdomainSetup)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

// One application of the interface operator: one Stokes and one Darcy solve.
void BM_InterfaceOperatorApply(benchmark::State& state) {
    const auto tc = test1(table1_kappa, table1_epsilon, mesh_size(state));
    const SubdomainSystems sys(tc.problem);
    const auto ops = build_interface_operators(sys);
    const auto a = interface_system_operator(ops);
    const Vector x = Vector::Ones(a.size);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a(x));
    }
}
BENCHMARK(BM_InterfaceOperatorApply)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_GmresInterfaceSolve(benchmark::State& state) {
    const auto tc = test1(table1_kappa, table1_epsilon, mesh_size(state));
    const SubdomainSystems sys(tc.problem);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gmres_interface_solve(sys));
    }
}
BENCHMARK(BM_GmresInterfaceSolve)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_ReductionFactor(benchmark::State& state) {
    const auto ph = PhysicalParams::isotropic(1e-3, 1e-2, table2_n1bl, 1e-4);
    const auto band = frequency_band(1.0, table2_h);
    const auto robin = optimal_alphas(ph, band).robin();
    double k = band.k_min;
    for (auto _ : state) {
        benchmark::DoNotOptimize(rho(ph, robin, k));
        k = k < band.k_max ? k + 1.0 : band.k_min;
    }
}
BENCHMARK(BM_ReductionFactor);

void BM_OptimalAlphas(benchmark::State& state) {
    const auto ph = PhysicalParams::isotropic(1e-3, 1e-2, table2_n1bl, 1e-4);
    const auto band = frequency_band(1.0, table2_h);
    for (auto _ : state) {
        benchmark::DoNotOptimize(optimal_alphas(ph, band));
    }
}
BENCHMARK(BM_OptimalAlphas);

void BM_Sweep(benchmark::State& state) {
    const auto ph = PhysicalParams::isotropic(1e-3, 1e-2, table2_n1bl, 1e-4);
    const auto band = frequency_band(1.0, table2_h);
    const auto robin = optimal_alphas(ph, band).robin();
    for (auto _ : state) {
        benchmark::DoNotOptimize(sweep_reduction_factor(ph, robin, band, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_Sweep)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
