#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "fif/estimate.hpp"

using fif::arithmetic_mean_derivatives;

TEST_CASE("benchmark monotone data") {
    const auto d = arithmetic_mean_derivatives({0, 2, 3, 9, 11}, {0, 4, 7, 9, 13});
    REQUIRE(d.size() == 5);
    CHECK(d[0] == doctest::Approx(1.3333).epsilon(1e-4));
    CHECK(d[1] == doctest::Approx(2.6666).epsilon(1e-4));
    CHECK(d[2] == doctest::Approx(2.6190).epsilon(1e-4));
    CHECK(d[3] == doctest::Approx(1.5833).epsilon(1e-4));
    CHECK(d[4] == doctest::Approx(2.4166).epsilon(1e-4));
}

TEST_CASE("benchmark convex data") {
    const auto d =
        arithmetic_mean_derivatives({2.2, 4, 5, 10, 10.22}, {2, 0.625, 0.4, 1, 1.8});
    CHECK(d[0] == doctest::Approx(-1.1103).epsilon(1e-3));
    CHECK(d[1] == doctest::Approx(-0.4175).epsilon(1e-3));
    CHECK(d[2] == doctest::Approx(-0.1675).epsilon(1e-3));
    CHECK(d[3] == doctest::Approx(3.4882).epsilon(1e-3));
    CHECK(d[4] == doctest::Approx(3.7846).epsilon(1e-3));
}

TEST_CASE("exact for collinear data") {
    const std::vector<double> x{0, 0.7, 1.5, 4};
    std::vector<double> y;
    for (double v : x)
        y.push_back(2.5 * v - 1.0);
    for (double s : arithmetic_mean_derivatives(x, y))
        CHECK(s == doctest::Approx(2.5).epsilon(1e-13));
}

TEST_CASE("exact for quadratics at interior knots on uniform meshes") {
    const std::vector<double> x{0, 1, 2, 3, 4};
    std::vector<double> y;
    for (double v : x)
        y.push_back(v * v);
    const auto d = arithmetic_mean_derivatives(x, y);
    for (std::size_t j = 1; j + 1 < x.size(); ++j)
        CHECK(d[j] == doctest::Approx(2.0 * x[j]).epsilon(1e-13));
}

TEST_CASE("shift invariance in y") {
    const std::vector<double> x{0, 2, 3, 9, 11};
    const std::vector<double> y{0, 4, 7, 9, 13};
    std::vector<double> shifted;
    for (double v : y)
        shifted.push_back(v + 42.0);
    const auto d0 = arithmetic_mean_derivatives(x, y);
    const auto d1 = arithmetic_mean_derivatives(x, shifted);
    for (std::size_t j = 0; j < x.size(); ++j)
        CHECK(d0[j] == doctest::Approx(d1[j]).epsilon(1e-12));
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(arithmetic_mean_derivatives({0, 1}, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(arithmetic_mean_derivatives({0, 1, 1}, {0, 1, 2}),
                    std::invalid_argument);
    CHECK_THROWS_AS(arithmetic_mean_derivatives({0, 1, 2}, {0, 1}),
                    std::invalid_argument);
}
