#pragma once

#include "magnomech/types.hpp"

namespace magnomech {

/// Fundamental constants plus the YIG material data the model needs.
/// Frequencies are angular (rad/s) throughout the library.
struct PhysicalConstants {
    double hbar = 1.054571817e-34;        ///< reduced Planck constant [J*s]
    double k_B = 1.380649e-23;            ///< Boltzmann constant [J/K]
    double gamma_gyro = two_pi * 28.0e9;  ///< gyromagnetic ratio [rad/(s*T)]
    double rho_spin = 4.22e27;            ///< YIG spin density [spins/m^3]
    double s_spin = 2.5;                  ///< spin quantum number of Fe3+
};

} // namespace magnomech
