#include "magnomech/dynamics.hpp"

#include "magnomech/errors.hpp"
#include "magnomech/thermal.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <limits>

namespace magnomech {

DriftMatrix build_drift(const SystemParams& params, const ModeAmplitudes& amplitudes) {
    const double da = params.delta_a;
    const double d1t = amplitudes.delta_1_tilde;
    const double d2 = params.delta_2;
    const double ka = params.kappa_a;
    const double k1 = params.kappa_1;
    const double k2 = params.kappa_2;
    const double g1 = params.g_1;
    const double g2 = params.g_2;
    const double G = amplitudes.g_eff;
    const double wb = params.omega_b;
    const double gb = params.gamma_b;

    DriftMatrix drift;
    drift.entries <<
        -ka,  da,   0,  g1,   0,  g2,   0,   0,
        -da, -ka, -g1,   0, -g2,   0,   0,   0,
          0,  g1, -k1, d1t,   0,   0,  -G,   0,
        -g1,   0, -d1t, -k1,  0,   0,   0,   0,
          0,  g2,   0,   0, -k2,  d2,   0,   0,
        -g2,   0,   0,   0, -d2, -k2,   0,   0,
          0,   0,   0,   0,   0,   0,   0,  wb,
          0,   0,   0,   G,   0,   0, -wb, -gb;
    return drift;
}

DiffusionMatrix build_diffusion(const SystemParams& params) {
    const double omega_0 = params.drive_frequency();
    const double delta_1 = params.is_effective() ? params.effective().delta_1_tilde
                                                 : params.physical().delta_1;
    const double n_a = thermal_occupancy(params.omega_a, params.temperature, params.constants);
    const double n_1 = thermal_occupancy(delta_1 + omega_0, params.temperature, params.constants);
    const double n_2 = thermal_occupancy(params.omega_magnon2(), params.temperature,
                                         params.constants);
    const double n_b = thermal_occupancy(params.omega_b, params.temperature, params.constants);

    DiffusionMatrix diffusion;
    diffusion.entries.diagonal() << params.kappa_a * (2.0 * n_a + 1.0),
        params.kappa_a * (2.0 * n_a + 1.0), params.kappa_1 * (2.0 * n_1 + 1.0),
        params.kappa_1 * (2.0 * n_1 + 1.0), params.kappa_2 * (2.0 * n_2 + 1.0),
        params.kappa_2 * (2.0 * n_2 + 1.0), 0.0, params.gamma_b * (2.0 * n_b + 1.0);
    return diffusion;
}

StabilityResult check_stability(const DriftMatrix& drift) {
    Eigen::EigenSolver<Mat8> solver(drift.entries, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("check_stability: eigensolver failed to converge");
    }
    StabilityResult result;
    result.max_re_eig = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < 8; ++i) {
        result.eigenvalues[static_cast<size_t>(i)] = solver.eigenvalues()(i);
        result.max_re_eig = std::max(result.max_re_eig, solver.eigenvalues()(i).real());
    }
    result.stable = result.max_re_eig < 0.0;
    return result;
}

} // namespace magnomech
