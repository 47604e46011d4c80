#include "magnomech/params.hpp"

#include <cmath>
#include <stdexcept>

namespace magnomech {

std::vector<std::string> validate_params(const SystemParams& params) {
    auto require = [](bool ok, const char* what) {
        if (!ok) {
            throw std::domain_error(std::string("invalid parameters: ") + what);
        }
    };
    require(params.omega_b > 0.0, "omega_b must be positive");
    require(params.kappa_a > 0.0, "kappa_a must be positive");
    require(params.kappa_1 > 0.0, "kappa_1 must be positive");
    require(params.kappa_2 > 0.0, "kappa_2 must be positive");
    require(params.gamma_b > 0.0, "gamma_b must be positive");
    require(params.temperature >= 0.0, "temperature must be non-negative");
    require(params.g_0 >= 0.0, "g_0 must be non-negative");
    require(std::isfinite(params.delta_a) && std::isfinite(params.delta_2),
            "detunings must be finite");

    std::vector<std::string> warnings;
    if (params.mechanical_q() < 100.0) {
        warnings.push_back("mechanical quality factor omega_b/gamma_b below 100; "
                           "the Markovian damping model is questionable");
    }
    return warnings;
}

} // namespace magnomech
