#include "magnomech/sweep.hpp"

#include "magnomech/errors.hpp"

#include <array>
#include <cmath>
#include <exception>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

namespace magnomech {

namespace {

const EntanglementResult& find_pair(const std::array<EntanglementResult, 6>& results,
                                    ModePair pair) {
    for (const EntanglementResult& entry : results) {
        if (entry.pair == pair ||
            (entry.pair.first == pair.second && entry.pair.second == pair.first)) {
            return entry;
        }
    }
    throw std::domain_error("find_pair: the two modes of a pair must be distinct");
}

/// Current value of a knob as read back from the parameters, used as the
/// source side of a link.
double knob_value(const SystemParams& params, Knob knob) {
    switch (knob) {
    case Knob::DeltaA: return params.delta_a;
    case Knob::Delta2: return params.delta_2;
    case Knob::Delta1Tilde:
        if (!params.is_effective()) {
            throw std::domain_error("knob delta_1_tilde requires an effective drive");
        }
        return params.effective().delta_1_tilde;
    case Knob::G2OverG1:
        if (params.g_1 == 0.0) {
            throw std::domain_error("knob g2_over_g1 requires g_1 != 0");
        }
        return params.g_2 / params.g_1;
    case Knob::GOverG1:
        if (!params.is_effective()) {
            throw std::domain_error("knob g_over_g1 requires an effective drive");
        }
        if (params.g_1 == 0.0) {
            throw std::domain_error("knob g_over_g1 requires g_1 != 0");
        }
        return params.effective().g_eff / params.g_1;
    case Knob::Temperature: return params.temperature;
    case Knob::Kappa12: return params.kappa_1;
    }
    throw std::domain_error("knob_value: unknown knob");
}

void apply_links(SystemParams& params, const std::vector<ParamLink>& links) {
    for (const ParamLink& link : links) {
        const double value = link.factor * knob_value(params, link.source);
        switch (link.target) {
        case LinkTarget::Delta2: params.delta_2 = value; break;
        case LinkTarget::KappaA: params.kappa_a = value; break;
        }
    }
}

/// Parameters of grid point (i, j) after axes and links.
SystemParams point_params(const SystemParams& base, const std::vector<AxisSpec>& axes,
                          const std::vector<ParamLink>& links, int i, int j) {
    SystemParams params = base;
    apply_knob(params, axes[0].knob, axes[0].value_at(i));
    if (axes.size() > 1) {
        apply_knob(params, axes[1].knob, axes[1].value_at(j));
    }
    apply_links(params, links);
    return params;
}

void validate_axes(const std::vector<AxisSpec>& axes) {
    if (axes.empty() || axes.size() > 2) {
        throw std::domain_error("sweep: expected one or two axes");
    }
    for (const AxisSpec& axis : axes) {
        if (axis.points < 1) {
            throw std::domain_error("sweep: an axis needs at least one point");
        }
        if (!std::isfinite(axis.start) || !std::isfinite(axis.stop)) {
            throw std::domain_error("sweep: axis endpoints must be finite");
        }
    }
    if (axes.size() == 2 && axes[0].knob == axes[1].knob) {
        throw std::domain_error("sweep: the two axes reference the same knob");
    }
}

} // namespace

const char* knob_name(Knob knob) {
    switch (knob) {
    case Knob::DeltaA: return "delta_a";
    case Knob::Delta2: return "delta_2";
    case Knob::Delta1Tilde: return "delta_1_tilde";
    case Knob::G2OverG1: return "g2_over_g1";
    case Knob::GOverG1: return "g_over_g1";
    case Knob::Temperature: return "temperature";
    case Knob::Kappa12: return "kappa_12";
    }
    return "unknown";
}

double AxisSpec::value_at(int i) const {
    if (points == 1) {
        return start;
    }
    return start + (stop - start) * static_cast<double>(i) / static_cast<double>(points - 1);
}

void apply_knob(SystemParams& params, Knob knob, double value) {
    switch (knob) {
    case Knob::DeltaA:
        params.delta_a = value;
        return;
    case Knob::Delta2:
        params.delta_2 = value;
        return;
    case Knob::Delta1Tilde:
        if (!params.is_effective()) {
            throw std::domain_error(
                "apply_knob: delta_1_tilde can only be swept with an effective drive");
        }
        std::get<EffectiveDrive>(params.drive).delta_1_tilde = value;
        return;
    case Knob::G2OverG1:
        params.g_2 = value * params.g_1;
        return;
    case Knob::GOverG1:
        if (!params.is_effective()) {
            throw std::domain_error(
                "apply_knob: g_over_g1 can only be swept with an effective drive");
        }
        std::get<EffectiveDrive>(params.drive).g_eff = value * params.g_1;
        return;
    case Knob::Temperature:
        params.temperature = value;
        return;
    case Knob::Kappa12:
        params.kappa_1 = value;
        params.kappa_2 = value;
        return;
    }
    throw std::domain_error("apply_knob: unknown knob");
}

SweepResult sweep(const SystemParams& params, const std::vector<AxisSpec>& axes, ModePair pair,
                  const std::vector<ParamLink>& links, int threads) {
    validate_axes(axes);

    SweepResult result;
    result.axes = axes;
    result.pair = pair;
    const int rows = result.rows();
    const int cols = result.cols();
    const size_t total = static_cast<size_t>(rows) * static_cast<size_t>(cols);
    result.values.assign(total, std::numeric_limits<double>::quiet_NaN());
    result.validity_flags.assign(total, 0);

    const auto evaluate_index = [&](size_t k) {
        const int i = static_cast<int>(k) / cols;
        const int j = static_cast<int>(k) % cols;
        const SystemParams local = point_params(params, axes, links, i, j);
        try {
            const PointResult point = evaluate_point(local);
            if (point.pairs.has_value()) {
                result.values[k] = find_pair(*point.pairs, pair).log_negativity;
                result.validity_flags[k] = point.validity.all_ok() ? 1 : 0;
            }
        } catch (const ConvergenceError&) {
            // Non-convergent mean-field point: leave NaN, flag stays false.
        }
    };

    int n_workers = threads < 1 ? 1 : threads;
    if (static_cast<size_t>(n_workers) > total) {
        n_workers = static_cast<int>(total);
    }
    if (n_workers <= 1) {
        for (size_t k = 0; k < total; ++k) {
            evaluate_index(k);
        }
        return result;
    }

    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> failures(static_cast<size_t>(n_workers));
    pool.reserve(static_cast<size_t>(n_workers));
    for (int t = 0; t < n_workers; ++t) {
        pool.emplace_back([&, t]() {
            try {
                for (size_t k = static_cast<size_t>(t); k < total;
                     k += static_cast<size_t>(n_workers)) {
                    evaluate_index(k);
                }
            } catch (...) {
                failures[static_cast<size_t>(t)] = std::current_exception();
            }
        });
    }
    for (std::thread& worker : pool) {
        worker.join();
    }
    for (const std::exception_ptr& failure : failures) {
        if (failure) {
            std::rethrow_exception(failure);
        }
    }
    return result;
}

std::vector<double> temperature_curve(const SystemParams& params,
                                      const std::vector<double>& temperatures, ModePair pair) {
    if (temperatures.empty()) {
        throw std::domain_error("temperature_curve: need at least one temperature");
    }
    for (size_t k = 0; k < temperatures.size(); ++k) {
        if (!(temperatures[k] >= 0.0)) {
            throw std::domain_error("temperature_curve: temperatures must be non-negative");
        }
        if (k > 0 && temperatures[k] <= temperatures[k - 1]) {
            throw std::domain_error("temperature_curve: temperatures must be ascending");
        }
    }
    std::vector<double> curve;
    curve.reserve(temperatures.size());
    SystemParams local = params;
    for (const double t : temperatures) {
        local.temperature = t;
        curve.push_back(log_negativity_at(local, pair));
    }
    return curve;
}

namespace {

/// -ln(2 nu_minus) as a function of temperature: positive while entangled,
/// negative once entanglement is gone; its root is the critical temperature.
double entanglement_margin(const SystemParams& params, ModePair pair, double temperature) {
    SystemParams local = params;
    local.temperature = temperature;
    const PointResult point = evaluate_point(local);
    if (!point.pairs.has_value()) {
        throw StabilityError(
            "critical_temperature: the dynamics are unstable; no steady state exists");
    }
    const double nu = find_pair(*point.pairs, pair).nu_minus;
    return -std::log(2.0 * nu);
}

} // namespace

double critical_temperature(const SystemParams& params, ModePair pair, double t_low,
                            double t_high, double tol) {
    if (!(t_low >= 0.0) || !(t_high > t_low)) {
        throw BracketError("critical_temperature: need 0 <= t_low < t_high, got [" +
                           std::to_string(t_low) + ", " + std::to_string(t_high) + "] K");
    }
    if (!(tol > 0.0)) {
        throw std::domain_error("critical_temperature: tol must be positive");
    }

    // Pre-scan at 8 equally spaced points (endpoints included): the margin
    // must start positive, end negative, and change sign exactly once, so the
    // bisection has exactly one root to find.
    constexpr int scan_points = 8;
    std::array<double, scan_points> scan_t{};
    std::array<double, scan_points> scan_f{};
    for (int k = 0; k < scan_points; ++k) {
        scan_t[static_cast<size_t>(k)] =
            t_low + (t_high - t_low) * static_cast<double>(k) / (scan_points - 1);
        scan_f[static_cast<size_t>(k)] =
            entanglement_margin(params, pair, scan_t[static_cast<size_t>(k)]);
    }
    if (!(scan_f.front() > 0.0)) {
        throw BracketError("critical_temperature: no entanglement at the lower bracket "
                           "endpoint t_low = " +
                           std::to_string(t_low) + " K");
    }
    if (!(scan_f.back() < 0.0)) {
        throw BracketError("critical_temperature: still entangled at the upper bracket "
                           "endpoint t_high = " +
                           std::to_string(t_high) + " K");
    }
    int sign_changes = 0;
    int change_index = 0;
    for (int k = 0; k + 1 < scan_points; ++k) {
        const bool lo_pos = scan_f[static_cast<size_t>(k)] > 0.0;
        const bool hi_pos = scan_f[static_cast<size_t>(k + 1)] > 0.0;
        if (lo_pos != hi_pos) {
            ++sign_changes;
            change_index = k;
        }
    }
    if (sign_changes != 1) {
        throw NumericalError("critical_temperature: entanglement margin changes sign " +
                             std::to_string(sign_changes) +
                             " times across the bracket; refusing to bisect a non-monotone "
                             "decay");
    }

    double lo = scan_t[static_cast<size_t>(change_index)];
    double hi = scan_t[static_cast<size_t>(change_index + 1)];
    for (int iter = 0; iter < 200 && hi - lo > tol; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (entanglement_margin(params, pair, mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<double> critical_temperature_sweep(const SystemParams& params, const AxisSpec& axis,
                                               ModePair pair, const std::vector<ParamLink>& links,
                                               double t_low, double t_high, double tol) {
    if (axis.points < 1) {
        throw std::domain_error("critical_temperature_sweep: the axis needs at least one point");
    }
    std::vector<double> out;
    out.reserve(static_cast<size_t>(axis.points));
    for (int i = 0; i < axis.points; ++i) {
        SystemParams local = params;
        apply_knob(local, axis.knob, axis.value_at(i));
        apply_links(local, links);
        out.push_back(critical_temperature(local, pair, t_low, t_high, tol));
    }
    return out;
}

} // namespace magnomech
