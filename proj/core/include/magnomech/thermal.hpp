#pragma once

#include "magnomech/constants.hpp"

namespace magnomech {

/// Bose-Einstein occupancy [exp(hbar*omega/kB*T) - 1]^-1 of a bath mode at
/// angular frequency omega [rad/s] and temperature [K]. Returns exactly zero
/// at T = 0 and evaluates without underflow surprises deep in the exponential
/// tail (GHz modes at mK temperatures).
/// Throws std::domain_error when omega <= 0 or temperature < 0.
double thermal_occupancy(double omega, double temperature,
                         const PhysicalConstants& constants = {});

} // namespace magnomech
