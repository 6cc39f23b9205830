#include <benchmark/benchmark.h>

#include "qcoh/bloch.hpp"
#include "qcoh/channels.hpp"
#include "qcoh/coherence.hpp"
#include "qcoh/gellmann.hpp"
#include "qcoh/nmutp.hpp"

using namespace qcoh;

namespace {

DensityMatrix fixed_state(int d) {
    RngStream rng = substream(7, static_cast<std::uint64_t>(d));
    return random_density(d, rng);
}

void BM_BuildBasis(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        GeneratorBasis b = build_basis(d);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_BuildBasis)->Arg(2)->Arg(4)->Arg(6);

void BM_Tensor(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const ComplexMatrix a = fixed_state(d).mat();
    const ComplexMatrix b = fixed_state(d).mat();
    for (auto _ : state) {
        ComplexMatrix k = tensor(a, b);
        benchmark::DoNotOptimize(k);
    }
}
BENCHMARK(BM_Tensor)->Arg(3)->Arg(6);

void BM_ToBloch(benchmark::State& state) {
    const DensityMatrix rho({2, 3}, fixed_state(6).mat());
    product_basis(rho.dims());  // warm the interned basis
    for (auto _ : state) {
        BlochVector v = to_bloch(rho);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_ToBloch);

void BM_Hsc(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const DensityMatrix rho = fixed_state(d);
    product_basis(rho.dims());
    for (auto _ : state) benchmark::DoNotOptimize(hsc(rho));
}
BENCHMARK(BM_Hsc)->Arg(3)->Arg(6);

void BM_RandomDensity(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    RngStream rng(11);
    for (auto _ : state) {
        DensityMatrix rho = random_density(d, rng);
        benchmark::DoNotOptimize(rho);
    }
}
BENCHMARK(BM_RandomDensity)->Arg(2)->Arg(5);

void BM_QuartetTrial(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    std::uint64_t index = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(is_inverted(sample_quartet(d, 5, index++)));
}
BENCHMARK(BM_QuartetTrial)->Arg(2)->Arg(5);

void BM_SweepPd(benchmark::State& state) {
    const DensityMatrix rho0 = rho_w(1.0);
    for (auto _ : state) {
        SweepResult res = sweep(ChannelKind::PD, rho0, 101);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_SweepPd);

}  // namespace

BENCHMARK_MAIN();
