#pragma once

#include "magnomech/dynamics.hpp"
#include "magnomech/entanglement.hpp"
#include "magnomech/lyapunov.hpp"
#include "magnomech/params.hpp"
#include "magnomech/steadystate.hpp"
#include "magnomech/validity.hpp"

#include <optional>

namespace magnomech {

/// Everything the pipeline knows about one operating point: steady-state
/// amplitudes, linearized dynamics, stability, covariance (absent when the
/// dynamics are unstable), entanglement of all six mode pairs, and the
/// validity audit.
struct PointResult {
    ModeAmplitudes amplitudes{};
    DriftMatrix drift{};
    DiffusionMatrix diffusion{};
    StabilityResult stability{};
    std::optional<CovarianceMatrix> covariance{};
    std::optional<std::array<EntanglementResult, 6>> pairs{};
    ValidityReport validity{};
};

/// Runs the full steady-state pipeline at one parameter point. The sweep
/// stability margin is applied: points within stability_margin_factor*omega_b
/// of marginal stability are reported unstable rather than solved.
PointResult evaluate_point(const SystemParams& params);

/// Convenience: log-negativity of one pair at one point; NaN when unstable.
double log_negativity_at(const SystemParams& params, ModePair pair);

} // namespace magnomech
