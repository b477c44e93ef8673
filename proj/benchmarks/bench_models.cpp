#include "mealsim/mealsim.hpp"

#include <benchmark/benchmark.h>

using namespace mealsim;

namespace {

Trajectory impulse_90g(const ModelInstance& model, double horizon) {
    MealSchedule schedule;
    schedule.events.push_back({0.0, 90000.0, 0.0});
    IntegratorOptions opts;
    opts.output_interval_min = 1.0;
    return simulate_impulse_meals(model, Vector::Zero(model.state_dim), schedule,
                                  horizon, opts);
}

void BM_HovorkaImpulse(benchmark::State& state) {
    const ModelInstance model = hovorka_model();
    for (auto _ : state) {
        benchmark::DoNotOptimize(impulse_90g(model, 600.0));
    }
}
BENCHMARK(BM_HovorkaImpulse);

void BM_DallaManImpulse(benchmark::State& state) {
    const ModelInstance model = dalla_man_model();
    for (auto _ : state) {
        benchmark::DoNotOptimize(impulse_90g(model, 600.0));
    }
}
BENCHMARK(BM_DallaManImpulse);

void BM_AlskarImpulse(benchmark::State& state) {
    const ModelInstance model = alskar_model();
    for (auto _ : state) {
        benchmark::DoNotOptimize(impulse_90g(model, 600.0));
    }
}
BENCHMARK(BM_AlskarImpulse);

void BM_CstrPfrFiniteVolume(benchmark::State& state) {
    const CstrPfrParams p;
    const ModelInstance model = cstr_pfr_model(
        p, OpenPylorus{},
        IntestineDiscretization::finite_volume(p, static_cast<int>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(impulse_90g(model, 600.0));
    }
}
BENCHMARK(BM_CstrPfrFiniteVolume)->Arg(100)->Arg(400);

void BM_CstrPfrSpectral(benchmark::State& state) {
    const CstrPfrParams p;
    const ModelInstance model = cstr_pfr_model(
        p, OpenPylorus{},
        IntestineDiscretization::spectral(p, static_cast<int>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(impulse_90g(model, 600.0));
    }
}
BENCHMARK(BM_CstrPfrSpectral)->Arg(16)->Arg(32);

void BM_MatrixExponential(benchmark::State& state) {
    const Eigen::Index n = state.range(0);
    Matrix a = Matrix::Random(n, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(expm(a));
    }
}
BENCHMARK(BM_MatrixExponential)->Arg(4)->Arg(32);

void BM_SpectralBasisConstruction(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(SpectralBasis::make(
            PolynomialFamily::Legendre, QuadratureRule::GaussLobatto,
            static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_SpectralBasisConstruction)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
