#pragma once

// Shared fixture for the test suites: the reference operating point used
// throughout (a strongly driven, red-detuned working point with both magnon
// modes coupled to the cavity), plus the values it is known to produce.
// The numbers were frozen from an independent implementation of the same
// model and cross-checked against the time-domain integrator; they guard
// against silent regressions at full double precision.

#include <magnomech/magnomech.hpp>

namespace reference {

inline magnomech::SystemParams params() {
    using magnomech::two_pi;
    magnomech::SystemParams p;
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
    p.sphere = magnomech::derive_sphere(2.5e-4);
    p.b_field = 3.9e-5;
    p.drive = magnomech::EffectiveDrive{two_pi * 8.5e6, two_pi * 4.8e6};
    return p;
}

// Frozen observables at the reference point (12 significant digits).
struct Frozen {
    // Minimum symplectic eigenvalue after partial transposition and the
    // resulting logarithmic negativity, in all_mode_pairs order.
    static constexpr double nu[6] = {0.523688619212, 0.511997065946, 0.397744862770,
                                     0.418125186728, 0.461717427954, 0.489701581223};
    static constexpr double log_neg[6] = {0.0, 0.0, 0.228797347013,
                                          0.178827220956, 0.0796550222669, 0.0208119107555};
    static constexpr bool entangled[6] = {false, false, true, true, true, true};

    // Steady-state covariance diagonal.
    static constexpr double cov_diag[8] = {0.530573551681, 0.558234519167, 0.600256145100,
                                           0.658476653783, 0.546336922229, 0.544043300605,
                                           0.683334931309, 0.598623539840};

    // Largest real part of the drift spectrum [rad/s].
    static constexpr double max_re_eig = -2159069.23039;

    // Mean amplitudes in the gauge with real, non-negative effective coupling.
    static constexpr double a_im = -4388938.64185;
    static constexpr double m1_im = -11313708.4990;  // = -g_eff / (sqrt(2) g_0)
    static constexpr double m2_im = -1267915.60764;
    static constexpr double q_avg = -3.84e6;         // exact: -g_0 |m1|^2 / omega_b
    static constexpr double rabi = 6.92476926913e14; // back-solved drive amplitude [rad/s]

    // Sphere-derived audit quantities (250 um diameter).
    static constexpr double sphere_volume = 8.18123086872e-12;  // [m^3]
    static constexpr double n_spins = 3.45247942660e16;
    static constexpr double kerr_coeff = 4.02123859659e-8;         // [rad/s] = 2*pi*6.4e-9
    static constexpr double rabi_from_b_field = 7.12677531744e14; // at 3.9e-5 T

    // Validity audit ratios.
    static constexpr double excitation_ratio_1 = 7.41496091266e-4;
    static constexpr double excitation_ratio_2 = 9.31278533174e-6;
    static constexpr double kerr_ratio = 0.0840948672566;

    // Critical temperature of the magnon-magnon pair, bisection within 1 mK.
    static constexpr double t_crit = 0.193663504464;  // [K]

    // Thermal occupancies used by the diffusion matrix.
    static constexpr double occ_10mhz_10mk = 20.3406183518;     // 2*pi*1e7 rad/s at 10 mK
    static constexpr double occ_10ghz_10mk = 1.43599250122e-21; // 2*pi*1e10 rad/s at 10 mK
    static constexpr double occ_10mhz_1k = 2083.16195360;       // 2*pi*1e7 rad/s at 1 K
};

inline magnomech::ModePair pair_m1_m2() {
    return {magnomech::Mode::Magnon1, magnomech::Mode::Magnon2};
}

} // namespace reference
