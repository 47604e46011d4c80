#pragma once

#include "magnomech/constants.hpp"
#include "magnomech/sphere.hpp"

#include <string>
#include <variant>
#include <vector>

namespace magnomech {

/// Drive specified through the quantities the linearized model actually uses:
/// the effective magnon-1 detuning (already containing the static
/// magnetostrictive shift) and the effective magnomechanical coupling
/// G = sqrt(2) * G0 * |<m1>|. The field amplitude is back-solved for
/// reporting. All rad/s.
struct EffectiveDrive {
    double delta_1_tilde = 0.0;
    double g_eff = 0.0;
};

/// Drive specified through laboratory quantities: the bare magnon-1 detuning
/// and the Rabi frequency of the drive field. The effective detuning and
/// coupling then follow from the nonlinear mean-field fixed point. All rad/s.
struct PhysicalDrive {
    double delta_1 = 0.0;
    double rabi = 0.0;
};

/// Full physical description of the four-mode system: one microwave cavity
/// mode, two magnon modes (m1 driven and coupled to the mechanics, m2 a
/// spectator coupled only through the cavity), and one mechanical mode.
/// Angular frequencies (rad/s) everywhere; temperature in K.
struct SystemParams {
    double omega_a = 0.0;      ///< cavity resonance
    double omega_b = 0.0;      ///< mechanical resonance
    double gamma_b = 0.0;      ///< mechanical energy damping
    double kappa_a = 0.0;      ///< cavity amplitude decay
    double kappa_1 = 0.0;      ///< magnon-1 amplitude decay
    double kappa_2 = 0.0;      ///< magnon-2 amplitude decay
    double g_1 = 0.0;          ///< cavity <-> magnon-1 coupling
    double g_2 = 0.0;          ///< cavity <-> magnon-2 coupling
    double delta_a = 0.0;      ///< cavity detuning omega_a - omega_0
    double delta_2 = 0.0;      ///< magnon-2 detuning omega_2 - omega_0
    double temperature = 0.0;  ///< bath temperature [K]
    double g_0 = 0.0;          ///< single-magnon magnomechanical coupling
    SphereProps sphere{};      ///< geometry for spin count / Kerr audit
    double b_field = 0.0;      ///< drive field amplitude [T] (audit only)
    std::variant<EffectiveDrive, PhysicalDrive> drive = EffectiveDrive{};
    PhysicalConstants constants{};

    bool is_effective() const noexcept {
        return std::holds_alternative<EffectiveDrive>(drive);
    }
    const EffectiveDrive& effective() const { return std::get<EffectiveDrive>(drive); }
    const PhysicalDrive& physical() const { return std::get<PhysicalDrive>(drive); }

    /// Drive (rotating-frame) frequency omega_0 = omega_a - delta_a.
    double drive_frequency() const noexcept { return omega_a - delta_a; }
    /// Laboratory frequency of magnon 2, reconstructed from its detuning.
    double omega_magnon2() const noexcept { return delta_2 + drive_frequency(); }
    /// Mechanical quality factor.
    double mechanical_q() const noexcept { return omega_b / gamma_b; }
};

/// Validates hard requirements (positive dissipation rates and mechanical
/// frequency, non-negative temperature) and returns soft warnings (low
/// mechanical quality factor breaking the Markov assumption).
/// Throws std::domain_error on hard violations.
std::vector<std::string> validate_params(const SystemParams& params);

} // namespace magnomech
