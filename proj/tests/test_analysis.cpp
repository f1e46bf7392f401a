#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gliosim/analysis.hpp"
#include "gliosim/errors.hpp"

using gliosim::FitWindow;
using gliosim::Grid;
using gliosim::ScalarField;
using gliosim::SimConfig;
using gliosim::VelocityReadings;
using gliosim::data_error;

TEST_SUITE("analysis") {

TEST_CASE("theoretical velocities for pure white matter") {
    SimConfig cfg;  // rho = 0.025, D_w = 0.13
    const VelocityReadings v = gliosim::theoretical_velocity(1.0, 0.0, cfg);
    CHECK(v.v_kpp == doctest::Approx(2.0 * std::sqrt(0.13 * 0.025)).epsilon(1e-14));
    CHECK(v.v_kpp == doctest::Approx(0.11402).epsilon(1e-4));
    CHECK(v.v_paper == doctest::Approx(2.0 * std::sqrt(0.13) * 0.025).epsilon(1e-14));
    CHECK(v.v_paper == doctest::Approx(0.018028).epsilon(1e-4));
}

TEST_CASE("theoretical velocities for a mixed medium") {
    SimConfig cfg;
    const VelocityReadings v = gliosim::theoretical_velocity(0.3, 0.7, cfg);
    const double d_eff = 0.3 * 0.13 + 0.7 * 0.013;  // 0.0481
    CHECK(v.v_kpp == doctest::Approx(2.0 * std::sqrt(d_eff * 0.025)).epsilon(1e-14));
    CHECK(v.v_kpp == doctest::Approx(0.069354).epsilon(1e-4));
    CHECK(v.v_paper == doctest::Approx(0.0109658).epsilon(1e-4));
}

TEST_CASE("velocity is zero without proliferation and monotone in white content") {
    SimConfig cfg;
    cfg.rho = 0.0;
    CHECK(gliosim::theoretical_velocity(0.5, 0.5, cfg).v_kpp == 0.0);

    SimConfig live;
    double prev = -1.0;
    for (double pw : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const double v = gliosim::theoretical_velocity(pw, 1.0 - pw, live).v_kpp;
        CHECK(v > prev);  // D_w > D_g makes speed increase with white fraction
        prev = v;
    }
}

TEST_CASE("fractions must be a nonnegative partition of one") {
    SimConfig cfg;
    CHECK_THROWS_AS(gliosim::theoretical_velocity(-0.1, 1.1, cfg), std::invalid_argument);
    CHECK_THROWS_AS(gliosim::theoretical_velocity(0.6, 0.6, cfg), std::invalid_argument);
    CHECK_NOTHROW(gliosim::theoretical_velocity(0.3, 0.7, cfg));
}

TEST_CASE("front position on a linear ramp is found by exact interpolation") {
    // 11 points at x = 0..100, u falling linearly 0.2 -> 0 over the line, so
    // u = 0.1 exactly at x = 50; threshold crossing interpolates to x = 90
    // for u(x) = 0.2 (1 - x/100) with threshold 0.02... use explicit values.
    const Grid g(11, 1, 1, 10.0);
    ScalarField u(g);
    for (int i = 0; i < 11; ++i) u.values[static_cast<std::size_t>(i)] = 0.2 * (1.0 - i / 10.0);
    // u = {0.2, 0.18, ..., 0.02, 0.0}; threshold 0.11 crosses between x=40 (0.12)
    // and x=50 (0.10): 40 + 10*(0.12-0.11)/(0.12-0.10) = 45.
    const double r = gliosim::front_position(u, 0, 0.11, {0.0, 0.0, 0.0});
    CHECK(r == doctest::Approx(45.0).epsilon(1e-12));
}

TEST_CASE("front position handles steps, directions, and empty fields") {
    const Grid g(11, 1, 1, 10.0);
    ScalarField u(g);

    SUBCASE("all zero gives radius zero") {
        CHECK(gliosim::front_position(u, 0, 0.1, {50.0, 0.0, 0.0}) == 0.0);
    }
    SUBCASE("sharp step lands within one spacing") {
        for (int i = 0; i <= 3; ++i) u.values[static_cast<std::size_t>(i)] = 1.0;
        const double r = gliosim::front_position(u, 0, 0.5, {0.0, 0.0, 0.0});
        CHECK(r >= 30.0);
        CHECK(r <= 40.0);
    }
    SUBCASE("the farther of the two directions wins") {
        // Seed at x = 50; mass reaches x = 90 on the right, x = 30 on the left.
        for (int i = 3; i <= 9; ++i) u.values[static_cast<std::size_t>(i)] = 1.0;
        const double r = gliosim::front_position(u, 0, 0.5, {50.0, 0.0, 0.0});
        CHECK(r >= 40.0 - 1e-9);
        CHECK(r <= 50.0 + 1e-9);
    }
    SUBCASE("saturated line reports the domain edge distance") {
        for (auto& v : u.values) v = 1.0;
        CHECK(gliosim::front_position(u, 0, 0.5, {0.0, 0.0, 0.0}) == doctest::Approx(100.0));
    }
}

TEST_CASE("front position works along y and z") {
    const Grid g(3, 7, 5, 2.0);
    ScalarField u(g);
    // Fill a column along y at (x=2, z=2) in grid coords (1-based index 2,?,3).
    for (int j = 1; j <= 4; ++j)
        u.values[static_cast<std::size_t>(gliosim::global_index(2, j, 3, g))] = 1.0;
    const double ry = gliosim::front_position(u, 1, 0.5, {2.0, 0.0, 4.0});
    CHECK(ry >= 6.0 - 1e-9);
    CHECK(ry <= 8.0 + 1e-9);

    ScalarField w(g);
    for (int k = 1; k <= 2; ++k)
        w.values[static_cast<std::size_t>(gliosim::global_index(2, 4, k, g))] = 1.0;
    const double rz = gliosim::front_position(w, 2, 0.5, {2.0, 6.0, 0.0});
    CHECK(rz >= 2.0 - 1e-9);
    CHECK(rz <= 4.0 + 1e-9);
}

TEST_CASE("front position validates its arguments") {
    const Grid g(5, 5, 1, 1.0);
    ScalarField u(g);
    CHECK_THROWS_AS(gliosim::front_position(u, 3, 0.1, {0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(gliosim::front_position(u, -1, 0.1, {0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(gliosim::front_position(u, 0, 0.0, {0, 0, 0}), std::invalid_argument);
}

TEST_CASE("velocity estimation recovers an exact linear trend") {
    std::vector<double> times, positions;
    for (int i = 0; i <= 40; ++i) {
        const double t = 150.0 + 20.0 * i;
        times.push_back(t);
        positions.push_back(0.11 * (t - 150.0));
    }
    FitWindow w;
    w.skip_leading = 0.2;
    CHECK(gliosim::estimate_velocity(times, positions, w) == doctest::Approx(0.11).epsilon(1e-12));

    // Shifting all positions by a constant changes nothing.
    for (double& p : positions) p += 37.0;
    CHECK(gliosim::estimate_velocity(times, positions, w) == doctest::Approx(0.11).epsilon(1e-12));
}

TEST_CASE("velocity estimation windows out transients and boundary samples") {
    std::vector<double> times, positions;
    for (int i = 0; i <= 50; ++i) {
        times.push_back(static_cast<double>(i));
        double p = 2.0 * i;
        if (i < 10) p = 0.5 * i;          // slow launch transient
        if (p > 80.0) p = 80.0;           // saturation at the boundary
        positions.push_back(p);
    }
    FitWindow w;
    w.skip_leading = 0.2;  // removes the transient rows
    w.r_min = 12.0;
    w.r_max = 79.0;  // removes the saturated tail
    CHECK(gliosim::estimate_velocity(times, positions, w) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("velocity estimation rejects degenerate inputs") {
    FitWindow w;
    w.skip_leading = 0.0;
    CHECK_THROWS_AS(gliosim::estimate_velocity({0.0, 1.0}, {0.0, 1.0}, w), data_error);

    std::vector<double> times = {0.0, 1.0, 2.0, 3.0};
    CHECK_THROWS_AS(gliosim::estimate_velocity({0.0, 0.0, 0.0, 0.0}, {0.0, 1.0, 2.0, 3.0}, w),
                    data_error);

    // Constant positions fit a zero slope.
    CHECK(gliosim::estimate_velocity(times, {5.0, 5.0, 5.0, 5.0}, w) == 0.0);

    FitWindow narrow;
    narrow.skip_leading = 0.0;
    narrow.r_min = 100.0;  // nothing qualifies
    CHECK_THROWS_AS(gliosim::estimate_velocity(times, {1.0, 2.0, 3.0, 4.0}, narrow), data_error);
}

}  // TEST_SUITE
