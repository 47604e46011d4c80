#pragma once

#include "magnomech/entanglement.hpp"
#include "magnomech/params.hpp"
#include "magnomech/pipeline.hpp"

#include <vector>

namespace magnomech {

/// The parameters a sweep may vary. Detunings and kappa_12 take rad/s,
/// temperature takes K, the coupling ratios are dimensionless multiples of
/// g_1 (which stays fixed). Kappa12 sets both magnon dissipation rates.
enum class Knob {
    DeltaA,
    Delta2,
    Delta1Tilde,
    G2OverG1,
    GOverG1,
    Temperature,
    Kappa12,
};

const char* knob_name(Knob knob);

/// One linearly spaced sweep axis in the knob's internal units.
struct AxisSpec {
    Knob knob = Knob::DeltaA;
    double start = 0.0;
    double stop = 0.0;
    int points = 2;

    /// Axis value at index i (linear spacing, endpoints inclusive).
    double value_at(int i) const;
};

/// Parameters that track an axis knob instead of staying fixed, e.g.
/// delta_2 := delta_a or kappa_a := 5 * kappa_12.
enum class LinkTarget { Delta2, KappaA };

struct ParamLink {
    LinkTarget target = LinkTarget::Delta2;
    Knob source = Knob::DeltaA;
    double factor = 1.0;
};

/// Result of a 1- or 2-axis sweep. `values` is row-major over
/// (axis0, axis1); unstable grid points hold NaN (a stable separable point
/// holds 0, which means something different). validity_flags mirror the grid
/// and are true where the point is stable and passes the validity audit.
struct SweepResult {
    std::vector<AxisSpec> axes{};
    std::vector<double> values{};
    std::vector<char> validity_flags{};
    ModePair pair{Mode::Magnon1, Mode::Magnon2};

    int rows() const { return axes.empty() ? 0 : axes[0].points; }
    int cols() const { return axes.size() < 2 ? 1 : axes[1].points; }
    double& at(int i, int j) { return values[static_cast<size_t>(i) * cols() + j]; }
    double at(int i, int j) const { return values[static_cast<size_t>(i) * cols() + j]; }
};

/// Applies one knob value to a copy of the parameters.
void apply_knob(SystemParams& params, Knob knob, double value);

/// Evaluates the log-negativity of `pair` over a 1- or 2-axis grid. Links are
/// applied after the axis values at every grid point. Grid points are
/// independent; `threads` > 1 evaluates them concurrently with identical
/// results.
/// Throws std::domain_error when the axes reference the same knob.
SweepResult sweep(const SystemParams& params, const std::vector<AxisSpec>& axes,
                  ModePair pair, const std::vector<ParamLink>& links = {}, int threads = 1);

/// Log-negativity of `pair` at each listed temperature, everything else held
/// fixed. Temperatures must be ascending and non-negative.
std::vector<double> temperature_curve(const SystemParams& params,
                                      const std::vector<double>& temperatures, ModePair pair);

/// Critical temperature: the root of -ln(2 nu_minus(T)) located by bisection
/// within tol. Requires entanglement present at t_low and absent at t_high;
/// the bracket is pre-scanned at 8 points and configurations with multiple
/// sign changes (non-monotone decay) are rejected rather than silently
/// returning one of several roots.
/// Throws BracketError naming the failing endpoint, or NumericalError for a
/// non-monotone pre-scan.
double critical_temperature(const SystemParams& params, ModePair pair, double t_low,
                            double t_high, double tol = 1e-3);

/// Critical temperature per grid point of a one-axis sweep (with links), e.g.
/// T_c as a function of the magnon dissipation rate.
std::vector<double> critical_temperature_sweep(const SystemParams& params, const AxisSpec& axis,
                                               ModePair pair, const std::vector<ParamLink>& links,
                                               double t_low, double t_high, double tol = 1e-3);

} // namespace magnomech
