#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>

#include "offres/biphoton.hpp"
#include "offres/bloch.hpp"
#include "offres/dressed.hpp"
#include "offres/trajectory.hpp"

using namespace offres;

namespace {

const PhysicalParams kParams(1.0, 100.0);

void BM_DiagonalizeSemiclassical(benchmark::State& state) {
    const std::complex<double> beta{1.0, 0.4};
    for (auto _ : state) {
        benchmark::DoNotOptimize(diagonalize_semiclassical(kParams, beta));
    }
}
BENCHMARK(BM_DiagonalizeSemiclassical);

void BM_DressedFrameClosedForm(benchmark::State& state) {
    const std::complex<double> beta{1.0, 0.4};
    for (auto _ : state) {
        benchmark::DoNotOptimize(dressed_frame(kParams, beta));
    }
}
BENCHMARK(BM_DressedFrameClosedForm);

void BM_SimulateTrajectory(benchmark::State& state) {
    const double beta = 100.0 * std::tan(0.2) / (2.0 * std::sqrt(2.0));
    const auto env = PulseEnvelope::constant({beta, 0.0}, 1e4, 10.0);
    std::uint64_t seed = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_trajectory(env, kParams, seed++));
    }
}
BENCHMARK(BM_SimulateTrajectory);

void BM_BlochSteadyState(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(bloch_steady_state(kParams, {1.0, 0.0}));
    }
}
BENCHMARK(BM_BlochSteadyState);

void BM_BlochEvolve(benchmark::State& state) {
    const auto env = PulseEnvelope::constant({0.5, 0.0}, 1.0, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            bloch_evolve(DensityMatrix2::ground(), env, kParams, 4e-4));
    }
}
BENCHMARK(BM_BlochEvolve);

void BM_BiphotonTransform(benchmark::State& state) {
    const auto frame = dressed_frame(PhysicalParams(1.0, 50.0),
                                     {50.0 * std::tan(0.2) / (2.0 * std::sqrt(2.0)), 0.0});
    FrequencyGridSpec spec;
    spec.n_tau = static_cast<std::size_t>(state.range(0));
    spec.half_width_span = 40.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(biphoton_freq_numeric(frame, 1.0, spec));
    }
}
BENCHMARK(BM_BiphotonTransform)->Arg(1 << 16)->Arg(1 << 18);

}  // namespace

BENCHMARK_MAIN();
