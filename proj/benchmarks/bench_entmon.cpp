#include <benchmark/benchmark.h>

#include "entmon/classifier.hpp"
#include "entmon/monodromy.hpp"
#include "entmon/rng.hpp"
#include "entmon/spectral.hpp"
#include "entmon/tracker.hpp"

namespace {

using namespace entmon;

LevelSetSlice default_slice() {
    Eigen::VectorXd x(2);
    x << 0.2, 0.3;
    return LevelSetSlice::through(x);
}

void BM_Eigendecompose(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    Rng rng(1);
    Eigen::MatrixXcd g = rng.ginibre(d);
    const HermitianMatrix h(0.5 * (g + g.adjoint().eval()), 1e-12);
    for (auto _ : state) benchmark::DoNotOptimize(eigendecompose(h));
}
BENCHMARK(BM_Eigendecompose)->Arg(3)->Arg(8)->Arg(16);

void BM_EntropyGradient(benchmark::State& state) {
    Eigen::VectorXd diag(3);
    diag << 0.2, 0.3, 0.5;
    const DensityState rho = DensityState::from_diagonal(diag);
    for (auto _ : state) benchmark::DoNotOptimize(entropy_gradient(rho));
}
BENCHMARK(BM_EntropyGradient);

void BM_SolveLambda2(benchmark::State& state) {
    const LevelSetSlice slice = default_slice();
    for (auto _ : state) benchmark::DoNotOptimize(solve_lambda2(0.25, slice, 0.3));
}
BENCHMARK(BM_SolveLambda2);

void BM_TrackLoop(benchmark::State& state) {
    const LevelSetSlice slice = default_slice();
    const LogLiftState start = initial_lift(slice, 0.2, 0.3);
    PathSpec loop = PathSpec::circle(Complex(0.0, 0.0), 0.2, +1, 0.0);
    loop.steps_per_unit_arc = static_cast<int>(state.range(0));
    TrackOptions opts;
    opts.record_trace = false;
    for (auto _ : state) benchmark::DoNotOptimize(track(loop, start, slice, opts));
}
BENCHMARK(BM_TrackLoop)->Arg(256)->Arg(1024)->Arg(4096);

void BM_RunMonodromy(benchmark::State& state) {
    const LevelSetSlice slice = default_slice();
    for (auto _ : state) benchmark::DoNotOptimize(run_monodromy(slice, 0.2, 2));
}
BENCHMARK(BM_RunMonodromy);

void BM_Classify(benchmark::State& state) {
    const std::vector<ExactRational> spectrum{ExactRational(1, 2), ExactRational(1, 4),
                                              ExactRational(1, 4)};
    const LogBase base = LogBase::parse("2");
    for (auto _ : state) benchmark::DoNotOptimize(classify(spectrum, base));
}
BENCHMARK(BM_Classify);

void BM_FactorSemiprime(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(factor_u64(1000003ULL * 1000033ULL));
}
BENCHMARK(BM_FactorSemiprime);

} // namespace

BENCHMARK_MAIN();
