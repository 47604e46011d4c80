#include "support/reference.hpp"

#include <doctest/doctest.h>

#include <cmath>

using namespace magnomech;

namespace {

struct Point {
    SystemParams params = reference::params();
    ModeAmplitudes amps = solve_effective(params);
    DriftMatrix drift = build_drift(params, amps);
};

} // namespace

TEST_SUITE_BEGIN("validity");

TEST_CASE("audit ratios at the reference point") {
    const Point pt;
    const ValidityReport report = audit_validity(pt.params, pt.amps, pt.drift);

    CHECK(report.excitation_ratio_1 ==
          doctest::Approx(reference::Frozen::excitation_ratio_1).epsilon(1e-11));
    CHECK(report.excitation_ratio_2 ==
          doctest::Approx(reference::Frozen::excitation_ratio_2).epsilon(1e-11));
    CHECK(report.kerr_ratio == doctest::Approx(reference::Frozen::kerr_ratio).epsilon(1e-11));
    CHECK(report.markov_q == doctest::Approx(1.0e5).epsilon(1e-14));
    CHECK(report.stable);
    CHECK(report.max_re_eig == doctest::Approx(reference::Frozen::max_re_eig).epsilon(1e-11));
    CHECK(report.excitation_ok);
    CHECK(report.kerr_ok);
    CHECK(report.all_ok());
    CHECK(report.thresholds.excitation == 0.01);
    CHECK(report.thresholds.kerr == 0.1);
}

TEST_CASE("ratios follow their definitions") {
    const Point pt;
    const ValidityReport report = audit_validity(pt.params, pt.amps, pt.drift);

    const double m1_occ = std::norm(pt.amps.m1_avg);
    const double m2_occ = std::norm(pt.amps.m2_avg);
    const double capacity = 2.0 * pt.params.constants.s_spin * pt.params.sphere.n_spins;
    CHECK(report.excitation_ratio_1 == doctest::Approx(m1_occ / capacity).epsilon(1e-13));
    CHECK(report.excitation_ratio_2 == doctest::Approx(m2_occ / capacity).epsilon(1e-13));

    const double kerr_shift =
        pt.params.sphere.kerr_coeff * std::pow(std::abs(pt.amps.m1_avg), 3.0);
    CHECK(report.kerr_ratio == doctest::Approx(kerr_shift / pt.amps.rabi).epsilon(1e-13));
}

TEST_CASE("undriven system audits clean") {
    SystemParams p = reference::params();
    p.drive = EffectiveDrive{two_pi * 8.5e6, 0.0};
    const ModeAmplitudes amps = solve_effective(p);
    const ValidityReport report = audit_validity(p, amps, build_drift(p, amps));
    CHECK(report.excitation_ratio_1 == 0.0);
    CHECK(report.excitation_ratio_2 == 0.0);
    CHECK(report.kerr_ratio == 0.0);
    CHECK(report.excitation_ok);
    CHECK(report.kerr_ok);
}

TEST_CASE("thresholds are configurable and flip the flags") {
    const Point pt;
    ValidityThresholds strict;
    strict.excitation = 1e-9;
    strict.kerr = 1e-3;
    const ValidityReport report = audit_validity(pt.params, pt.amps, pt.drift, strict);
    CHECK_FALSE(report.excitation_ok);
    CHECK_FALSE(report.kerr_ok);
    CHECK_FALSE(report.all_ok());
    CHECK(report.stable);  // stability is unaffected by thresholds
}

TEST_CASE("instability is reported") {
    SystemParams p = reference::params();
    p.drive = EffectiveDrive{two_pi * 8.5e6, two_pi * 48.0e6};
    const ModeAmplitudes amps = solve_effective(p);
    const ValidityReport report = audit_validity(p, amps, build_drift(p, amps));
    CHECK_FALSE(report.stable);
    CHECK(report.max_re_eig > 0.0);
    CHECK_FALSE(report.all_ok());
}

TEST_SUITE_END();
