#pragma once

#include "magnomech/params.hpp"
#include "magnomech/steadystate.hpp"
#include "magnomech/types.hpp"

#include <array>

namespace magnomech {

/// Drift matrix of the linearized fluctuation dynamics over the quadratures
/// (dX, dY, dx1, dy1, dx2, dy2, dq, dp): cavity, magnon 1, magnon 2,
/// mechanics. Entries in rad/s.
struct DriftMatrix {
    Mat8 entries = Mat8::Zero();
};

/// Diagonal diffusion matrix of the input noise, same quadrature ordering.
struct DiffusionMatrix {
    Mat8 entries = Mat8::Zero();
};

/// Eigen-spectrum summary of a drift matrix.
struct StabilityResult {
    bool stable = false;        ///< max_re_eig < 0
    double max_re_eig = 0.0;    ///< largest real part [rad/s]
    std::array<Complex, 8> eigenvalues{};
};

/// Margin used by sweeps to exclude marginally stable points whose
/// steady-state covariance would be ill-conditioned: a grid point counts as
/// stable only if max_re_eig < -stability_margin_factor * omega_b.
inline constexpr double stability_margin_factor = 1e-6;

/// Assembles the drift matrix from the system parameters and the steady-state
/// amplitudes (which supply the effective detuning and the real, gauge-fixed
/// effective coupling).
DriftMatrix build_drift(const SystemParams& params, const ModeAmplitudes& amplitudes);

/// Assembles the diagonal diffusion matrix. Bath occupancies are evaluated at
/// the laboratory frequencies: cavity at omega_a, magnons at detuning + drive
/// frequency, mechanics at omega_b. The mechanical position row carries no
/// noise; its momentum row carries gamma_b * (2*N_b + 1).
DiffusionMatrix build_diffusion(const SystemParams& params);

/// Computes the eigenvalues of the drift matrix and the stability flag.
/// Throws NumericalError if the eigensolver fails to converge.
StabilityResult check_stability(const DriftMatrix& drift);

} // namespace magnomech
