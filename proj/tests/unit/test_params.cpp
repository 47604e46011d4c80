#include "support/reference.hpp"

#include <doctest/doctest.h>

#include <limits>

using namespace magnomech;

TEST_SUITE_BEGIN("params");

TEST_CASE("reference parameters validate without warnings") {
    const SystemParams p = reference::params();
    CHECK(validate_params(p).empty());
}

TEST_CASE("derived frame quantities") {
    const SystemParams p = reference::params();
    CHECK(p.drive_frequency() == doctest::Approx(two_pi * (1.0e10 + 9.0e6)).epsilon(1e-14));
    // delta_2 = delta_a at the reference point, so magnon 2 sits exactly on
    // the cavity resonance.
    CHECK(p.omega_magnon2() == doctest::Approx(p.omega_a).epsilon(1e-14));
    CHECK(p.mechanical_q() == doctest::Approx(1.0e5).epsilon(1e-14));
    CHECK(p.is_effective());
    CHECK(p.effective().g_eff == doctest::Approx(two_pi * 4.8e6));
}

TEST_CASE("hard violations throw") {
    auto expect_throw = [](auto mutate) {
        SystemParams p = reference::params();
        mutate(p);
        CHECK_THROWS_AS(validate_params(p), std::domain_error);
    };
    expect_throw([](SystemParams& p) { p.omega_b = 0.0; });
    expect_throw([](SystemParams& p) { p.omega_b = -1.0; });
    expect_throw([](SystemParams& p) { p.kappa_a = 0.0; });
    expect_throw([](SystemParams& p) { p.kappa_1 = -1.0; });
    expect_throw([](SystemParams& p) { p.kappa_2 = 0.0; });
    expect_throw([](SystemParams& p) { p.gamma_b = 0.0; });
    expect_throw([](SystemParams& p) { p.temperature = -1.0e-6; });
    expect_throw([](SystemParams& p) { p.g_0 = -1.0; });
    expect_throw([](SystemParams& p) { p.delta_a = std::numeric_limits<double>::infinity(); });
    expect_throw([](SystemParams& p) { p.delta_2 = std::numeric_limits<double>::quiet_NaN(); });
}

TEST_CASE("low mechanical quality factor only warns") {
    SystemParams p = reference::params();
    p.gamma_b = p.omega_b / 50.0;
    const auto warnings = validate_params(p);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("quality factor") != std::string::npos);
}

TEST_SUITE_END();
