#include "magnomech/sphere.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace magnomech {

namespace {
// Kerr reference: 2*pi*0.1 nHz for a 1 mm diameter sphere; scales with 1/V.
constexpr double kerr_reference = two_pi * 0.1e-9;
constexpr double kerr_reference_diameter = 1e-3;
} // namespace

SphereProps derive_sphere(double diameter, const PhysicalConstants& constants) {
    if (!(diameter > 0.0)) {
        throw std::domain_error("derive_sphere: diameter must be positive");
    }
    SphereProps props;
    props.diameter = diameter;
    props.volume = std::numbers::pi / 6.0 * diameter * diameter * diameter;
    props.n_spins = constants.rho_spin * props.volume;
    const double ref_volume = std::numbers::pi / 6.0 * kerr_reference_diameter *
                              kerr_reference_diameter * kerr_reference_diameter;
    props.kerr_coeff = kerr_reference * ref_volume / props.volume;
    return props;
}

double rabi_frequency(double b_field, const SphereProps& sphere,
                      const PhysicalConstants& constants) {
    if (b_field < 0.0) {
        throw std::domain_error("rabi_frequency: field amplitude must be non-negative");
    }
    return std::sqrt(5.0) / 4.0 * constants.gamma_gyro * std::sqrt(sphere.n_spins) * b_field;
}

} // namespace magnomech
