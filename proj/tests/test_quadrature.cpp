// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fdrelay/quadrature.hpp"

using namespace fdrelay;

TEST_CASE("polynomial and trigonometric integrals on finite intervals") {
    const QuadResult cubic = integrate_adaptive(
        [](double x) { return x * x; }, 0.0, 1.0, 1e-12);
    CHECK(cubic.converged);
    CHECK(cubic.value == doctest::Approx(1.0 / 3.0).epsilon(1e-13));

    const QuadResult sine = integrate_adaptive(
        [](double x) { return std::sin(x); }, 0.0, std::acos(-1.0), 1e-12);
    CHECK(sine.converged);
    CHECK(sine.value == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(sine.abs_err <= 1e-12);
}

TEST_CASE("exponential tails over the half line") {
    for (double tau : {0.01, 1.0, 37.5, 1e4}) {
        const QuadResult q = integrate_semi_infinite(
            [tau](double x) { return std::exp(-x / tau); }, tau,
            1e-10 * tau);
        CHECK(q.converged);
        CHECK(q.value == doctest::Approx(tau).epsilon(1e-10));
    }

    const QuadResult first_moment = integrate_semi_infinite(
        [](double x) { return x * std::exp(-x); }, 1.0, 1e-11);
    CHECK(first_moment.converged);
    CHECK(first_moment.value == doctest::Approx(1.0).epsilon(1e-10));

    const QuadResult gaussian = integrate_semi_infinite(
        [](double x) { return std::exp(-x * x); }, 1.0, 1e-11);
    CHECK(gaussian.converged);
    CHECK(gaussian.value ==
          doctest::Approx(std::sqrt(std::acos(-1.0)) / 2.0).epsilon(1e-10));
}

TEST_CASE("mismatched decay scale still converges") {
    // Decay length 1 but the map is built for scale 1000; adaptivity has to
    // do the work.
    const QuadResult q = integrate_semi_infinite(
        [](double x) { return std::exp(-x); }, 1000.0, 1e-10);
    CHECK(q.converged);
    CHECK(q.value == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("interval budget exhaustion is reported, not hidden") {
    // A kink the 15-point rule cannot represent, with almost no budget.
    const QuadResult q = integrate_adaptive(
        [](double x) { return x < 0.3141 ? 0.0 : 1.0; }, 0.0, 1.0, 1e-14, 4);
    CHECK_FALSE(q.converged);
    CHECK(q.abs_err > 1e-14);
    // The value is still a usable estimate.
    CHECK(q.value == doctest::Approx(1.0 - 0.3141).epsilon(0.05));
}

TEST_CASE("argument validation") {
    auto one = [](double) { return 1.0; };
    CHECK_THROWS_AS(integrate_adaptive(one, 0.0, 1.0, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(integrate_adaptive(one, 1.0, 0.0, 1e-10),
                    std::invalid_argument);
    CHECK_THROWS_AS(integrate_semi_infinite(one, 0.0, 1e-10),
                    std::invalid_argument);
}
