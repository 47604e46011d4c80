#pragma once

#include "magnomech/dynamics.hpp"

#include <array>
#include <string>

namespace magnomech {

/// Steady-state covariance matrix of the quadrature fluctuations;
/// dimensionless variances in the convention where vacuum variance is 1/2.
struct CovarianceMatrix {
    Mat8 entries = Mat8::Zero();
    std::array<std::string, 4> mode_labels{"cavity", "magnon1", "magnon2", "mechanics"};
};

/// Solves A V + V A^T = -D for the steady-state covariance by vectorizing
/// into a 64x64 dense linear system (Kronecker-sum form) and solving with a
/// partially pivoted LU. The result is symmetrized and residual-checked.
///
/// Throws StabilityError when the drift is not strictly stable and
/// NumericalError when the linear system is singular or the residual check
/// ||A V + V A^T + D||_F <= 1e-8 ||D||_F fails.
CovarianceMatrix solve_steady(const DriftMatrix& drift, const DiffusionMatrix& diffusion);

/// Independent cross-check oracle: integrates dV/dt = A V + V A^T + D from
/// V(0) = I/2 with a classical fixed-step fourth-order Runge-Kutta scheme and
/// returns V(horizon). Intended for validation, not production use.
///
/// Throws StabilityError for unstable drift and NumericalError (suggesting a
/// smaller step) if the iteration blows up.
CovarianceMatrix integrate_to_steady(const DriftMatrix& drift, const DiffusionMatrix& diffusion,
                                     double horizon, double step);

/// Step size satisfying the integrator's stability rule of thumb,
/// 0.01 / ||A||_inf.
double default_integration_step(const DriftMatrix& drift);

/// Frobenius norm of A V + V A^T + D.
double lyapunov_residual(const DriftMatrix& drift, const CovarianceMatrix& cm,
                         const DiffusionMatrix& diffusion);

} // namespace magnomech
