#pragma once

#include "magnomech/dynamics.hpp"
#include "magnomech/params.hpp"
#include "magnomech/steadystate.hpp"

namespace magnomech {

/// Thresholds above which the validity auditor flags a violation; the model
/// only requires "much less than", so the cutoffs are configurable.
struct ValidityThresholds {
    double excitation = 0.01;  ///< on <mj† mj> / (5 N)
    double kerr = 0.1;         ///< on K |<m1>|^3 / Omega
};

/// Quantitative audit of the approximations behind the linearized model:
/// low magnon excitation against the spin ensemble size, negligible magnon
/// self-Kerr nonlinearity against the drive, Markovian mechanical damping,
/// and dynamical stability.
struct ValidityReport {
    double excitation_ratio_1 = 0.0;  ///< <m1† m1> / (5 N)
    double excitation_ratio_2 = 0.0;  ///< <m2† m2> / (5 N)
    double kerr_ratio = 0.0;          ///< K |<m1>|^3 / Omega (0 when undriven)
    double markov_q = 0.0;            ///< mechanical quality factor omega_b / gamma_b
    bool stable = false;
    double max_re_eig = 0.0;          ///< [rad/s]
    bool excitation_ok = true;        ///< both ratios below threshold
    bool kerr_ok = true;              ///< kerr_ratio below threshold
    ValidityThresholds thresholds{};

    bool all_ok() const noexcept { return stable && excitation_ok && kerr_ok; }
};

/// Builds the report from parameters, steady-state amplitudes, and the drift
/// matrix computed from them. Always succeeds; violations are flags, not
/// errors.
ValidityReport audit_validity(const SystemParams& params, const ModeAmplitudes& amplitudes,
                              const DriftMatrix& drift, ValidityThresholds thresholds = {});

} // namespace magnomech
