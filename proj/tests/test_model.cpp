// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fdrelay/model.hpp"

using namespace fdrelay;

TEST_CASE("decibel conversion") {
    CHECK(db_to_linear(0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(db_to_linear(20.0) == doctest::Approx(100.0).epsilon(1e-15));
    // 10^0.3, independently computed reference
    CHECK(db_to_linear(3.0) ==
          doctest::Approx(1.9952623149688796).epsilon(1e-14));
    CHECK(linear_to_db(100.0) == doctest::Approx(20.0).epsilon(1e-14));
    CHECK_THROWS_AS(linear_to_db(0.0), std::domain_error);
    CHECK_THROWS_AS(linear_to_db(-1.0), std::domain_error);
}

TEST_CASE("decibel round trip over twelve decades") {
    for (int k = -60; k <= 60; ++k) {
        const double x = std::pow(10.0, k / 10.0);
        CHECK(db_to_linear(linear_to_db(x)) ==
              doctest::Approx(x).epsilon(1e-12));
    }
}

TEST_CASE("rate thresholds") {
    CHECK(gamma_of(1.0) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(gamma_of(0.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(gamma_of(2.0) == doctest::Approx(15.0).epsilon(1e-15));
    CHECK(eta_of(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(eta_of(2.0) == doctest::Approx(3.0).epsilon(1e-15));
    // sqrt(2) - 1, independently computed reference
    CHECK(eta_of(0.5) ==
          doctest::Approx(0.41421356237309515).epsilon(1e-14));
}

TEST_CASE("gamma equals the squared eta identity") {
    std::mt19937_64 gen(1);
    std::uniform_real_distribution<double> rate(0.01, 6.0);
    for (int i = 0; i < 1000; ++i) {
        const double r = rate(gen);
        const double eta = eta_of(r);
        CHECK(gamma_of(r) ==
              doctest::Approx((eta + 1.0) * (eta + 1.0) - 1.0)
                  .epsilon(1e-12));
    }
}

TEST_CASE("psi endpoint values") {
    CHECK(psi(1.0, 3.0) == 0.0);
    CHECK(psi(1.0, 123.0) == 0.0);
    CHECK(psi(0.0, 3.0) == doctest::Approx(1.0).epsilon(1e-15));
    // sqrt(3.25) - 1, independently computed reference
    CHECK(psi(0.5, 3.0) ==
          doctest::Approx(0.8027756377319946).epsilon(1e-14));
    CHECK(psi(0.3, 0.0) == 0.0);
}

TEST_CASE("psi is non-increasing and stays in range") {
    for (double gamma : {0.0, 0.5, 3.0, 15.0, 63.0}) {
        double previous = psi(0.0, gamma);
        const double top = std::sqrt(1.0 + gamma) - 1.0;
        CHECK(previous <= top + 1e-12);
        for (int i = 1; i <= 2000; ++i) {
            const double x = i / 2000.0;
            const double value = psi(x, gamma);
            CHECK(value <= previous + 1e-15);
            CHECK(value >= 0.0);
            previous = value;
        }
    }
}

TEST_CASE("psi rejects out-of-domain input") {
    CHECK_THROWS_AS(psi(-0.01, 3.0), std::domain_error);
    CHECK_THROWS_AS(psi(1.01, 3.0), std::domain_error);
    CHECK_THROWS_AS(psi(0.5, -1.0), std::domain_error);
}

TEST_CASE("psi_ratio matches the quotient and its limit") {
    for (double gamma : {0.5, 3.0, 15.0}) {
        for (double x : {0.0, 0.3, 0.7, 0.999}) {
            const double direct = psi(x, gamma) / (1.0 - x * x);
            CHECK(psi_ratio(x, gamma) ==
                  doctest::Approx(direct).epsilon(1e-12));
        }
        CHECK(psi_ratio(1.0, gamma) ==
              doctest::Approx(gamma / 2.0).epsilon(1e-15));
    }
}

TEST_CASE("system parameters reject non-positive fields") {
    CHECK_NOTHROW(SystemParams(1, 1, 100, 100, 10, 2, 1));
    CHECK_THROWS_AS(SystemParams(0, 1, 100, 100, 10, 2, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(SystemParams(1, -1, 100, 100, 10, 2, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(SystemParams(1, 1, 0, 100, 10, 2, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(SystemParams(1, 1, 100, 0, 10, 2, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(SystemParams(1, 1, 100, 100, 0, 2, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(SystemParams(1, 1, 100, 100, 10, 0, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(SystemParams(1, 1, 100, 100, 10, 2, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(SystemParams(1, 1, 100, 100, 10, 2,
                                 std::numeric_limits<double>::infinity()),
                    std::invalid_argument);
}

TEST_CASE("signal config enforces the power cap and circularity range") {
    const SystemParams params(1, 2, 100, 100, 10, 2, 1);
    CHECK_NOTHROW(SignalConfig(params, 2.0, 0.0));
    CHECK_NOTHROW(SignalConfig(params, 0.5, 1.0));
    CHECK_THROWS_AS(SignalConfig(params, 0.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(SignalConfig(params, 2.5, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(SignalConfig(params, 1.0, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(SignalConfig(params, 1.0, 1.1), std::invalid_argument);
}
