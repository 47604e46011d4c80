#include "magnomech/validity.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace magnomech {

ValidityReport audit_validity(const SystemParams& params, const ModeAmplitudes& amplitudes,
                              const DriftMatrix& drift, ValidityThresholds thresholds) {
    ValidityReport report;
    report.thresholds = thresholds;

    // Low-excitation condition against the spin ensemble: <mj† mj> << 2 s N.
    const double capacity = 2.0 * params.constants.s_spin * params.sphere.n_spins;
    if (capacity > 0.0) {
        report.excitation_ratio_1 = std::norm(amplitudes.m1_avg) / capacity;
        report.excitation_ratio_2 = std::norm(amplitudes.m2_avg) / capacity;
    }

    // Kerr condition: the self-Kerr shift K |<m1>|^3 must stay well below the
    // drive Rabi frequency. Undriven systems trivially satisfy it.
    const double rabi = std::abs(amplitudes.rabi);
    const double m1_mag = std::abs(amplitudes.m1_avg);
    report.kerr_ratio =
        rabi > 0.0 ? params.sphere.kerr_coeff * m1_mag * m1_mag * m1_mag / rabi : 0.0;

    report.markov_q = params.mechanical_q();

    const StabilityResult stability = check_stability(drift);
    report.stable = stability.stable;
    report.max_re_eig = stability.max_re_eig;

    // NaN ratios (amplitudes unavailable) must never count as satisfied.
    const bool excitation_known = std::isfinite(report.excitation_ratio_1) &&
                                  std::isfinite(report.excitation_ratio_2);
    report.excitation_ok =
        excitation_known &&
        std::max(report.excitation_ratio_1, report.excitation_ratio_2) < thresholds.excitation;
    report.kerr_ok = report.kerr_ratio < thresholds.kerr;
    return report;
}

} // namespace magnomech
