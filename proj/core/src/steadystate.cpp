#include "magnomech/steadystate.hpp"

#include "magnomech/errors.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

namespace magnomech {

namespace {

using std::abs;

constexpr Complex imag_unit{0.0, 1.0};

// Relative cutoff below which a closed-form denominator counts as vanishing.
constexpr double singular_rel = 1e-14;

void warn_if_dissipation_not_small(const SystemParams& params, double delta_1_tilde,
                                   std::vector<std::string>& warnings) {
    auto ratio = [](double kappa, double detuning) {
        return detuning != 0.0 ? kappa / std::abs(detuning)
                               : std::numeric_limits<double>::infinity();
    };
    const double worst = std::max({ratio(params.kappa_a, params.delta_a),
                                   ratio(params.kappa_1, delta_1_tilde),
                                   ratio(params.kappa_2, params.delta_2)});
    if (worst > 0.1) {
        warnings.push_back("dissipation rates are not small against the detunings; "
                           "the closed-form steady state neglects them");
    }
}

// Cavity response dressed by the spectator magnon, chi = (i da + ka) + g2^2/(i d2 + k2).
Complex dressed_cavity_response(const SystemParams& p) {
    return Complex{p.kappa_a, p.delta_a} + p.g_2 * p.g_2 / Complex{p.kappa_2, p.delta_2};
}

// Positive real roots of the magnon-number self-consistency cubic, in terms of
// t = eta * x (rad/s):
//   t^3 - 2 (d1 + Im b) t^2 + (|Re b|^2 + (d1 + Im b)^2) t - eta Omega^2 = 0.
// Solved as companion-matrix eigenvalues; used for bistability detection and
// for locating the branch connected to zero drive.
std::vector<double> positive_cubic_roots(double eta, double delta_1, Complex beta, double rabi) {
    const double s = delta_1 + beta.imag();
    const double c2 = -2.0 * s;
    const double c1 = beta.real() * beta.real() + s * s;
    const double c0 = -eta * rabi * rabi;
    Eigen::Matrix3d companion;
    companion << 0, 0, -c0,
                 1, 0, -c1,
                 0, 1, -c2;
    Eigen::EigenSolver<Eigen::Matrix3d> solver(companion, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("steady-state cubic: eigensolver failed");
    }
    std::vector<double> roots;
    const double scale = std::abs(c2) + std::sqrt(std::abs(c1)) + std::cbrt(std::abs(c0));
    for (int i = 0; i < 3; ++i) {
        const Complex z = solver.eigenvalues()(i);
        if (std::abs(z.imag()) < 1e-9 * (std::abs(z.real()) + scale) && z.real() > 0.0) {
            roots.push_back(z.real());
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace

ModeAmplitudes solve_effective(const SystemParams& params) {
    if (!params.is_effective()) {
        throw InconsistentParametersError("solve_effective requires an effective drive");
    }
    ModeAmplitudes out;
    out.warnings = validate_params(params);

    const EffectiveDrive& drive = params.effective();
    const double d1t = drive.delta_1_tilde;
    const double g_eff = drive.g_eff;
    if (g_eff < 0.0) {
        throw std::domain_error("solve_effective: g_eff must be non-negative");
    }
    out.delta_1_tilde = d1t;
    out.g_eff = g_eff;
    if (g_eff == 0.0) {
        return out; // undriven: every amplitude zero
    }
    if (params.g_0 == 0.0) {
        throw InconsistentParametersError(
            "solve_effective: g_eff != 0 requires a nonzero single-magnon coupling g_0");
    }

    const double da = params.delta_a;
    const double d2 = params.delta_2;
    if (d2 == 0.0) {
        throw SingularConfigurationError("solve_effective: delta_2 = 0");
    }
    const double den = da * d1t * d2 - params.g_1 * params.g_1 * d2 - params.g_2 * params.g_2 * d1t;
    const double den_scale = std::abs(da * d1t * d2) + params.g_1 * params.g_1 * std::abs(d2) +
                             params.g_2 * params.g_2 * std::abs(d1t);
    if (std::abs(den) <= singular_rel * den_scale) {
        throw SingularConfigurationError(
            "solve_effective: three-mode detuning denominator vanishes");
    }
    const double pole = da * d2 - params.g_2 * params.g_2;
    if (std::abs(pole) <= singular_rel * (std::abs(da * d2) + params.g_2 * params.g_2)) {
        throw SingularConfigurationError(
            "solve_effective: delta_a*delta_2 - g_2^2 = 0, drive amplitude undefined");
    }

    const double m1_mag = g_eff / (std::sqrt(2.0) * params.g_0);
    const double rabi = g_eff * den / (std::sqrt(2.0) * params.g_0 * pole);

    out.m1_avg = -imag_unit * m1_mag; // gauge with real, non-negative coupling
    out.a_avg = imag_unit * params.g_1 * d2 * rabi / den;
    out.m2_avg = -params.g_2 * out.a_avg / d2;
    out.q_avg = -(params.g_0 / params.omega_b) * m1_mag * m1_mag;
    out.p_avg = 0.0;
    out.gauge_phase = 0.0;
    out.rabi = rabi;

    warn_if_dissipation_not_small(params, d1t, out.warnings);
    return out;
}

ModeAmplitudes solve_physical(const SystemParams& params, double tol, int max_iter) {
    if (params.is_effective()) {
        throw InconsistentParametersError("solve_physical requires a physical drive");
    }
    ModeAmplitudes out;
    out.warnings = validate_params(params);

    const PhysicalDrive& drive = params.physical();
    const double rabi = drive.rabi;
    const double delta_1 = drive.delta_1;
    if (rabi < 0.0) {
        throw std::domain_error("solve_physical: rabi must be non-negative");
    }
    out.rabi = rabi;
    out.delta_1_tilde = delta_1;
    if (rabi == 0.0) {
        return out; // undriven: every amplitude zero
    }

    const Complex chi = dressed_cavity_response(params);
    const Complex beta = params.kappa_1 + params.g_1 * params.g_1 / chi;
    const double eta = params.g_0 * params.g_0 / params.omega_b;

    // Self-consistency for x = |<m1>|^2: x = F(x).
    auto self_map = [&](double x) {
        const Complex response = imag_unit * (delta_1 - eta * x) + beta;
        return rabi * rabi / std::norm(response);
    };

    double x = 0.0;
    bool converged = false;
    if (eta == 0.0) {
        x = self_map(0.0);
        converged = true;
    } else {
        // Damped fixed-point iteration from zero drive.
        for (int it = 0; it < max_iter; ++it) {
            const double next = 0.5 * x + 0.5 * self_map(x);
            if (std::abs(next - x) <= tol * std::max(next, 1e-300)) {
                x = next;
                converged = true;
                break;
            }
            x = next;
        }
        if (!converged) {
            // The damped iteration oscillates at strong drive. Fall back to a
            // scan-and-bisect on g(x) = F(x) - x over [0, X], X an upper bound
            // for every fixed point; the first sign change from the origin is
            // the branch continuously connected to zero drive.
            const double upper = rabi * rabi / (beta.real() * beta.real());
            auto g = [&](double v) { return self_map(v) - v; };
            constexpr int scan_points = 1024;
            double lo = 0.0;
            double hi = upper;
            for (int k = 1; k <= scan_points; ++k) {
                const double v = upper * static_cast<double>(k) / scan_points;
                if (g(v) <= 0.0) {
                    lo = upper * static_cast<double>(k - 1) / scan_points;
                    hi = v;
                    break;
                }
            }
            for (int it = 0; it < 200 && (hi - lo) > tol * std::max(hi, 1e-300); ++it) {
                const double mid = 0.5 * (lo + hi);
                (g(mid) > 0.0 ? lo : hi) = mid;
            }
            x = 0.5 * (lo + hi);
        }
        // Newton polish on h(x) = x |i(d1 - eta x) + beta|^2 - Omega^2.
        for (int it = 0; it < 8; ++it) {
            const double s = delta_1 - eta * x + beta.imag();
            const double norm2 = beta.real() * beta.real() + s * s;
            const double h = x * norm2 - rabi * rabi;
            const double dh = norm2 + x * 2.0 * s * (-eta);
            if (dh == 0.0) {
                break;
            }
            const double step = h / dh;
            const double next = x - step;
            if (!(next > 0.0)) {
                break;
            }
            x = next;
            if (std::abs(step) <= 1e-16 * x) {
                break;
            }
        }
    }

    const double d1t = delta_1 - eta * x;
    Complex m1 = rabi / (imag_unit * d1t + beta);
    Complex a = -imag_unit * params.g_1 * m1 / chi;
    Complex m2 = -imag_unit * params.g_2 * a / Complex{params.kappa_2, params.delta_2};

    // Residuals of the full steady-state equations. The magnon-1 equation is
    // evaluated with the effective detuning recomputed from the returned
    // amplitude, so it measures the genuine self-consistency error, not the
    // linear solve (which is exact by construction).
    const double d1t_check = delta_1 - eta * std::norm(m1);
    const Complex r_a = Complex{params.kappa_a, params.delta_a} * a +
                        imag_unit * (params.g_1 * m1 + params.g_2 * m2);
    const Complex r_m1 = Complex{params.kappa_1, d1t_check} * m1 + imag_unit * params.g_1 * a - rabi;
    const Complex r_m2 = Complex{params.kappa_2, params.delta_2} * m2 + imag_unit * params.g_2 * a;
    const double residual = std::max({std::abs(r_a), std::abs(r_m1), std::abs(r_m2)});
    if (!(residual < tol * rabi)) {
        throw ConvergenceError("solve_physical: fixed point not reached within tolerance",
                               residual);
    }

    if (eta > 0.0 && positive_cubic_roots(eta, delta_1, beta, rabi).size() > 1) {
        out.warnings.push_back("multiple steady-state branches detected (bistable drive); "
                               "returning the branch continuously connected to zero drive");
    }

    // Rotate the optical-frequency amplitudes so the effective coupling is
    // real and non-negative; entanglement is invariant under this gauge.
    const double phase = -std::numbers::pi / 2.0 - std::arg(m1);
    const Complex rotation = std::exp(imag_unit * phase);
    out.gauge_phase = phase;
    out.m1_avg = m1 * rotation;
    out.a_avg = a * rotation;
    out.m2_avg = m2 * rotation;
    out.q_avg = -(params.g_0 / params.omega_b) * x;
    out.p_avg = 0.0;
    out.delta_1_tilde = d1t;
    out.g_eff = std::sqrt(2.0) * params.g_0 * std::abs(m1);

    warn_if_dissipation_not_small(params, d1t, out.warnings);
    return out;
}

ModeAmplitudes solve_amplitudes(const SystemParams& params) {
    return params.is_effective() ? solve_effective(params) : solve_physical(params);
}

} // namespace magnomech
