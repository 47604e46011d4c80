#pragma once

#include "magnomech/constants.hpp"

namespace magnomech {

/// Geometry-derived properties of the YIG sphere hosting the magnon modes.
struct SphereProps {
    double diameter = 0.0;    ///< [m]
    double volume = 0.0;      ///< [m^3], (pi/6) d^3
    double n_spins = 0.0;     ///< total spin count N = rho * V
    double kerr_coeff = 0.0;  ///< magnon self-Kerr coefficient [rad/s]
};

/// Computes volume, spin count, and the self-Kerr coefficient for a sphere of
/// the given diameter. The Kerr coefficient scales inversely with volume and
/// is anchored to 2*pi*0.1 nHz for a 1 mm sphere.
/// Throws std::domain_error for non-positive diameters.
SphereProps derive_sphere(double diameter, const PhysicalConstants& constants = {});

/// Collective Rabi frequency (sqrt(5)/4) * gamma * sqrt(N) * B0 of the
/// magnon drive for a field amplitude b_field, in rad/s.
/// Throws std::domain_error for negative fields.
double rabi_frequency(double b_field, const SphereProps& sphere,
                      const PhysicalConstants& constants = {});

} // namespace magnomech
