// Microbenchmarks for the hot paths: the mean-field solvers, the dense
// Lyapunov solve, the symplectic spectrum, the full per-point pipeline, and a
// sweep row. Run the binary directly; it is not part of the ctest suite.

#include <magnomech/magnomech.hpp>

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

namespace {

using namespace magnomech;

/// The strongly driven red-detuned working point used across the docs.
SystemParams baseline() {
    SystemParams p;
    p.omega_a = two_pi * 1.0e10;
    p.omega_b = two_pi * 1.0e7;
    p.gamma_b = two_pi * 100.0;
    p.kappa_a = two_pi * 1.0e6;
    p.kappa_1 = two_pi * 1.0e6;
    p.kappa_2 = two_pi * 1.0e6;
    p.g_1 = two_pi * 3.2e6;
    p.g_2 = two_pi * 2.6e6;
    p.delta_a = -two_pi * 9.0e6;
    p.delta_2 = -two_pi * 9.0e6;
    p.temperature = 0.01;
    p.g_0 = two_pi * 0.3;
    p.sphere = derive_sphere(2.5e-4);
    p.b_field = 3.9e-5;
    p.drive = EffectiveDrive{two_pi * 8.5e6, two_pi * 4.8e6};
    return p;
}

void BM_solve_effective(benchmark::State& state) {
    const SystemParams p = baseline();
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_effective(p));
    }
}
BENCHMARK(BM_solve_effective);

void BM_solve_physical(benchmark::State& state) {
    SystemParams p = baseline();
    p.drive = PhysicalDrive{two_pi * 9.652e6, 6.92476926913e14};
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_physical(p));
    }
}
BENCHMARK(BM_solve_physical);

void BM_build_and_check_stability(benchmark::State& state) {
    const SystemParams p = baseline();
    const ModeAmplitudes amplitudes = solve_amplitudes(p);
    for (auto _ : state) {
        const DriftMatrix drift = build_drift(p, amplitudes);
        benchmark::DoNotOptimize(check_stability(drift));
    }
}
BENCHMARK(BM_build_and_check_stability);

void BM_solve_steady(benchmark::State& state) {
    const SystemParams p = baseline();
    const ModeAmplitudes amplitudes = solve_amplitudes(p);
    const DriftMatrix drift = build_drift(p, amplitudes);
    const DiffusionMatrix diffusion = build_diffusion(p);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_steady(drift, diffusion));
    }
}
BENCHMARK(BM_solve_steady);

void BM_integrate_to_steady(benchmark::State& state) {
    const SystemParams p = baseline();
    const ModeAmplitudes amplitudes = solve_amplitudes(p);
    const DriftMatrix drift = build_drift(p, amplitudes);
    const DiffusionMatrix diffusion = build_diffusion(p);
    const double horizon = 5.0 / p.kappa_a;
    const double step = default_integration_step(drift);
    for (auto _ : state) {
        benchmark::DoNotOptimize(integrate_to_steady(drift, diffusion, horizon, step));
    }
}
BENCHMARK(BM_integrate_to_steady);

void BM_symplectic_spectrum(benchmark::State& state) {
    const PointResult point = evaluate_point(baseline());
    const Eigen::MatrixXd cm = point.covariance->entries;
    for (auto _ : state) {
        benchmark::DoNotOptimize(symplectic_spectrum(cm));
    }
}
BENCHMARK(BM_symplectic_spectrum);

void BM_all_bipartite(benchmark::State& state) {
    const PointResult point = evaluate_point(baseline());
    const CovarianceMatrix cm = *point.covariance;
    for (auto _ : state) {
        benchmark::DoNotOptimize(all_bipartite(cm));
    }
}
BENCHMARK(BM_all_bipartite);

void BM_evaluate_point(benchmark::State& state) {
    const SystemParams p = baseline();
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate_point(p));
    }
}
BENCHMARK(BM_evaluate_point);

void BM_sweep_row(benchmark::State& state) {
    const SystemParams p = baseline();
    const std::vector<AxisSpec> axes{{Knob::DeltaA, -2.0 * p.omega_b, 0.0, 61}};
    const ModePair pair{Mode::Magnon1, Mode::Magnon2};
    const std::vector<ParamLink> links{{LinkTarget::Delta2, Knob::DeltaA, 1.0}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(sweep(p, axes, pair, links, 1));
    }
}
BENCHMARK(BM_sweep_row)->Unit(benchmark::kMillisecond);

void BM_critical_temperature(benchmark::State& state) {
    const SystemParams p = baseline();
    const ModePair pair{Mode::Magnon1, Mode::Magnon2};
    for (auto _ : state) {
        benchmark::DoNotOptimize(critical_temperature(p, pair, 0.005, 0.5, 1e-3));
    }
}
BENCHMARK(BM_critical_temperature)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
