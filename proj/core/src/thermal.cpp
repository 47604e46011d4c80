#include "magnomech/thermal.hpp"

#include <cmath>
#include <stdexcept>

namespace magnomech {

double thermal_occupancy(double omega, double temperature, const PhysicalConstants& constants) {
    if (!(omega > 0.0)) {
        throw std::domain_error("thermal_occupancy: omega must be positive");
    }
    if (temperature < 0.0) {
        throw std::domain_error("thermal_occupancy: temperature must be non-negative");
    }
    if (temperature == 0.0) {
        return 0.0;
    }
    // expm1 keeps precision for k_B T >> hbar omega; for the opposite tail the
    // exponential overflows to inf and the occupancy cleanly underflows to 0.
    const double x = constants.hbar * omega / (constants.k_B * temperature);
    return 1.0 / std::expm1(x);
}

} // namespace magnomech
