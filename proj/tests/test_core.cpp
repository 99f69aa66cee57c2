#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "fif/model.hpp"
#include "test_util.hpp"

using namespace fif;
using testutil::monotone_data;

TEST_CASE("knot validation") {
    CHECK_THROWS_AS(HermiteData({0}, {1}, {0}), std::invalid_argument);
    CHECK_THROWS_AS(HermiteData({0, 0}, {1, 2}, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(HermiteData({1, 0}, {1, 2}, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(HermiteData({0, 1}, {1, 2, 3}, {0, 0}), std::invalid_argument);
}

TEST_CASE("mesh-derived quantities") {
    const auto data = monotone_data();
    CHECK(data.interval_count() == 4);
    CHECK(data.h()[0] == 2.0);
    CHECK(data.h()[2] == 6.0);
    CHECK(data.delta()[0] == doctest::Approx(2.0));
    CHECK(data.delta()[2] == doctest::Approx(1.0 / 3.0));
    // horizontal contractions and the affine maps
    CHECK(data.a()[0] == doctest::Approx(2.0 / 11.0));
    CHECK(data.a()[1] == doctest::Approx(1.0 / 11.0));
    CHECK(data.a()[2] == doctest::Approx(6.0 / 11.0));
    CHECK(data.a()[3] == doctest::Approx(2.0 / 11.0));
    double sum = 0.0;
    for (double ai : data.a())
        sum += ai;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("value coefficients, hand-computed case") {
    const auto data = monotone_data();
    FifParameters params;
    params.alpha = {0.18, 0.0, 0.0, 0.0};
    params.r = {2.0, 3.0, 3.0, 3.0};
    const auto fif = build_fif(data, params);
    const auto& c = fif.value_coeffs(0);
    CHECK(c[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(c[1] == doctest::Approx(0.02667).epsilon(1e-3));
    CHECK(c[2] == doctest::Approx(2.77167).epsilon(1e-5));
    CHECK(c[3] == doctest::Approx(1.66).epsilon(1e-12));
    // L_1 maps the whole span onto the first interval
    CHECK(fif.map_forward(0, 0.0) == doctest::Approx(0.0));
    CHECK(fif.map_forward(0, 11.0) == doctest::Approx(2.0));
    CHECK(fif.map_b(0) == doctest::Approx(0.0));
}

TEST_CASE("classical coefficients reduce to cubic Hermite form") {
    const auto data = monotone_data();
    const auto fif = classical_spline(data, {3, 3, 3, 3});
    for (std::size_t i = 0; i < data.interval_count(); ++i) {
        const auto& c = fif.value_coeffs(i);
        CHECK(c[0] == data.y()[i]);
        CHECK(c[1] == doctest::Approx(3 * data.y()[i] + data.h()[i] * data.d()[i]));
        CHECK(c[2] ==
              doctest::Approx(3 * data.y()[i + 1] - data.h()[i] * data.d()[i + 1]));
        CHECK(c[3] == data.y()[i + 1]);
        CHECK(fif.q(i, 0.3) == doctest::Approx(1.0)); // Q == 1 at r = 3
    }
}

TEST_CASE("endpoint identities hold for random admissible models") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        const auto data = testutil::random_data(rng);
        const auto params = testutil::random_params(rng, data);
        const auto fif = build_fif(data, params);
        for (std::size_t i = 0; i < data.interval_count(); ++i) {
            const auto& c = fif.value_coeffs(i);
            CHECK(params.alpha[i] * data.y().front() + c[0] ==
                  doctest::Approx(data.y()[i]).epsilon(1e-12));
            CHECK(params.alpha[i] * data.y().back() + c[3] ==
                  doctest::Approx(data.y()[i + 1]).epsilon(1e-12));
            // denominator floor at theta = 1/2
            CHECK(fif.q(i, 0.5) >= (params.r[i] + 1.0) / 4.0 - 1e-14);
        }
    }
}

TEST_CASE("interval maps tile the span") {
    const auto data = monotone_data();
    const auto fif = classical_spline(data, {3, 3, 3, 3});
    for (std::size_t i = 0; i < data.interval_count(); ++i) {
        CHECK(fif.map_forward(i, data.x_front()) == doctest::Approx(data.x()[i]));
        CHECK(fif.map_forward(i, data.x_back()) == doctest::Approx(data.x()[i + 1]));
        const double mid = 0.5 * (data.x_front() + data.x_back());
        CHECK(fif.map_inverse(i, fif.map_forward(i, mid)) == doctest::Approx(mid));
    }
}

TEST_CASE("parameter validation") {
    const auto data = monotone_data();
    FifParameters params;
    params.alpha = {0.5, 0, 0, 0}; // 0.5 > a_1 = 2/11
    params.r = {3, 3, 3, 3};
    auto report = validate_parameters(data, params);
    REQUIRE_FALSE(report.ok());
    CHECK(report.violations.front().interval == 0);

    params.alpha = {0, 0, 0, 0};
    CHECK(validate_parameters(data, params).ok());

    params.r[1] = -1.0;
    report = validate_parameters(data, params);
    REQUIRE_FALSE(report.ok());
    CHECK(report.violations.front().interval == 1);

    CHECK_THROWS_AS(build_fif(data, FifParameters{{0.5, 0, 0, 0}, {3, 3, 3, 3}, 0.999}),
                    std::invalid_argument);
}

TEST_CASE("classical spline reproduces linear data") {
    const HermiteData data({0, 1}, {0, 1}, {1, 1});
    const auto fif = classical_spline(data, {3});
    for (double x : {0.0, 0.25, 0.5, 0.75, 1.0})
        CHECK(classical_eval(fif, x) == doctest::Approx(x).epsilon(1e-14));
}
