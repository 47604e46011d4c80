#pragma once

#include "magnomech/params.hpp"
#include "magnomech/types.hpp"

#include <string>
#include <vector>

namespace magnomech {

/// Semiclassical steady-state amplitudes of the four modes, reported in the
/// phase gauge where the effective magnomechanical coupling is real and
/// non-negative (a global phase rotation of the cavity and both magnon
/// amplitudes; entanglement measures are invariant under it).
struct ModeAmplitudes {
    Complex a_avg{};         ///< cavity amplitude <a>
    Complex m1_avg{};        ///< magnon-1 amplitude <m1>
    Complex m2_avg{};        ///< magnon-2 amplitude <m2>
    double q_avg = 0.0;      ///< static mechanical displacement <q>
    double p_avg = 0.0;      ///< static mechanical momentum <p> (zero)
    double delta_1_tilde = 0.0;  ///< effective magnon-1 detuning [rad/s]
    double g_eff = 0.0;          ///< effective coupling, real >= 0 [rad/s]
    double gauge_phase = 0.0;    ///< rotation applied to reach this gauge
    double rabi = 0.0;           ///< drive Rabi frequency [rad/s]
    std::vector<std::string> warnings{};
};

/// Closed-form steady state in the large-detuning approximation: the drive is
/// characterized by (delta_1_tilde, g_eff) directly, |<m1>| = g_eff/(sqrt(2) g_0),
/// the Rabi frequency is back-solved, and <a>, <m2>, <q> follow from the
/// kappa-free closed forms. Warns when the dissipation rates are not small
/// against the detunings.
///
/// Throws SingularConfigurationError when delta_2 = 0, when the three-mode
/// denominator delta_a*delta_1_tilde*delta_2 - g_1^2*delta_2 - g_2^2*delta_1_tilde
/// vanishes, or when delta_a*delta_2 - g_2^2 = 0 (pole of the Rabi back-solve);
/// InconsistentParametersError when g_0 = 0 with g_eff != 0.
ModeAmplitudes solve_effective(const SystemParams& params);

/// Exact nonlinear mean-field fixed point retaining all dissipation terms.
/// The self-consistency in x = |<m1>|^2 is solved by damped fixed-point
/// iteration (relaxation 0.5) with a scan-and-bisect fallback when the
/// iteration oscillates; the branch returned is the one continuously
/// connected to zero drive. When the underlying cubic has several positive
/// roots a bistability warning is recorded.
///
/// Throws ConvergenceError (with last residual) when max_iter is exhausted.
ModeAmplitudes solve_physical(const SystemParams& params, double tol = 1e-10,
                              int max_iter = 10000);

/// Dispatches on the drive description in params.
ModeAmplitudes solve_amplitudes(const SystemParams& params);

} // namespace magnomech
