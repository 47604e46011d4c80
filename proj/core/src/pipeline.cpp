#include "magnomech/pipeline.hpp"

#include "magnomech/errors.hpp"

#include <limits>
#include <string>
#include <utility>

namespace magnomech {

namespace {

/// At an amplitude-singular configuration (e.g. delta_2 = 0 with an effective
/// drive) the linearized dynamics are still perfectly well defined — only the
/// back-solved mean amplitudes diverge. Report NaN amplitudes and carry on.
ModeAmplitudes amplitudes_nan_fallback(const SystemParams& params, const char* reason) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    ModeAmplitudes out;
    out.a_avg = out.m1_avg = out.m2_avg = Complex{nan, nan};
    out.q_avg = out.p_avg = out.rabi = nan;
    out.delta_1_tilde = params.effective().delta_1_tilde;
    out.g_eff = params.effective().g_eff;
    out.warnings.push_back(std::string("mean amplitudes singular (") + reason +
                           "); fluctuation dynamics computed from the effective drive directly");
    return out;
}

} // namespace

PointResult evaluate_point(const SystemParams& params) {
    PointResult result;
    try {
        result.amplitudes = solve_amplitudes(params);
    } catch (const SingularConfigurationError& err) {
        if (!params.is_effective()) {
            throw;
        }
        // The fallback skips the amplitude solver, so collect the parameter
        // warnings it would have supplied.
        std::vector<std::string> warnings = validate_params(params);
        result.amplitudes = amplitudes_nan_fallback(params, err.what());
        result.amplitudes.warnings.insert(result.amplitudes.warnings.begin(),
                                          std::make_move_iterator(warnings.begin()),
                                          std::make_move_iterator(warnings.end()));
    }

    result.drift = build_drift(params, result.amplitudes);
    result.diffusion = build_diffusion(params);
    result.stability = check_stability(result.drift);
    result.validity = audit_validity(params, result.amplitudes, result.drift);

    const bool comfortably_stable =
        result.stability.max_re_eig < -stability_margin_factor * params.omega_b;
    if (!comfortably_stable) {
        result.stability.stable = false;
        result.validity.stable = false;
        return result;
    }

    result.covariance = solve_steady(result.drift, result.diffusion);
    result.pairs = all_bipartite(*result.covariance);
    return result;
}

double log_negativity_at(const SystemParams& params, ModePair pair) {
    const PointResult point = evaluate_point(params);
    if (!point.pairs.has_value()) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    for (const EntanglementResult& entry : *point.pairs) {
        if (entry.pair == pair || (entry.pair.first == pair.second && entry.pair.second == pair.first)) {
            return entry.log_negativity;
        }
    }
    throw std::domain_error("log_negativity_at: the two modes of a pair must be distinct");
}

} // namespace magnomech
