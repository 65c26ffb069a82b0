// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fdrelay/rates.hpp"
#include "test_support.hpp"

using namespace fdrelay;

namespace {

ChannelDraw random_draw(std::mt19937_64& gen, const SystemParams& params) {
    std::exponential_distribution<double> exp_draw(1.0);
    return {exp_draw(gen) * params.pi_sr, exp_draw(gen) * params.pi_rd,
            exp_draw(gen) * params.pi_rr, exp_draw(gen) * params.pi_sd};
}

// First-hop rate via the circularity decomposition: the proper-signal term
// plus the impropriety correction. Kept as an oracle for the simplified
// quotient actually used by rate_sr.
double rate_sr_via_circularity(const ChannelDraw& draw,
                               const SystemParams& params,
                               const SignalConfig& sig) {
    const double sinr = params.p_s * draw.g_sr /
                        (sig.p_r * draw.g_rr + 1.0);
    const RxCircularity cc = circularity_coeffs_relay_rx(draw, params, sig);
    return std::log2(1.0 + sinr) +
           0.5 * std::log2((1.0 - cc.received * cc.received) /
                           (1.0 - cc.interference * cc.interference));
}

}  // namespace

TEST_CASE("first-hop rate reduces to the proper-signal form at c_x = 0") {
    std::mt19937_64 gen(11);
    const SystemParams params(1, 1, 100, 100, 10, 2, 1);
    const SignalConfig proper(params, 1.0, 0.0);
    for (int i = 0; i < 200; ++i) {
        const ChannelDraw draw = random_draw(gen, params);
        const double expected = std::log2(
            1.0 + params.p_s * draw.g_sr / (proper.p_r * draw.g_rr + 1.0));
        CHECK(rate_sr(draw, params, proper) ==
              doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("first-hop rate is interference-free when the loopback is absent") {
    const SystemParams params(1, 1, 100, 100, 10, 2, 1);
    for (double cx : {0.0, 0.4, 1.0}) {
        const SignalConfig sig(params, 1.0, cx);
        const ChannelDraw draw(4.0, 1.0, 0.0, 1.0);
        CHECK(rate_sr(draw, params, sig) ==
              doctest::Approx(std::log2(5.0)).epsilon(1e-14));
    }
}

TEST_CASE("first-hop rate regression at a maximally improper point") {
    const SystemParams params(1, 1, 100, 100, 10, 2, 1);
    const SignalConfig sig(params, 1.0, 1.0);
    const ChannelDraw draw(4.0, 1.0, 1.0, 1.0);
    // 0.5 log2(35/3), independently computed reference
    CHECK(rate_sr(draw, params, sig) ==
          doctest::Approx(1.7721602581119051).epsilon(1e-13));
}

TEST_CASE("quotient and circularity-decomposition routes agree") {
    std::mt19937_64 gen(12);
    for (int i = 0; i < 100000; ++i) {
        const SystemParams params = testsupport::random_params(gen);
        const SignalConfig sig = testsupport::random_sig(gen, params);
        const ChannelDraw draw = random_draw(gen, params);
        const double direct = rate_sr(draw, params, sig);
        const double decomposed = rate_sr_via_circularity(draw, params, sig);
        CHECK(direct ==
              doctest::Approx(decomposed).epsilon(1e-10));
    }
}

TEST_CASE("second-hop rate special cases and regression") {
    const SystemParams params(1, 1, 100, 100, 10, 2, 1);
    const SignalConfig proper(params, 1.0, 0.0);
    const ChannelDraw draw(1.0, 4.0, 1.0, 1.0);
    CHECK(rate_rd(draw, params, proper) ==
          doctest::Approx(std::log2(1.0 + 4.0 / 2.0)).epsilon(1e-13));

    const SignalConfig improper(params, 1.0, 1.0);
    // 0.5 log2(5), independently computed reference
    CHECK(rate_rd(draw, params, improper) ==
          doctest::Approx(1.1609640474436812).epsilon(1e-13));

    const ChannelDraw no_signal(1.0, 0.0, 1.0, 1.0);
    CHECK(rate_rd(no_signal, params, improper) == 0.0);
}

TEST_CASE("relay receive circularity coefficients") {
    const SystemParams params(1, 1, 100, 100, 10, 2, 1);
    const ChannelDraw draw(4.0, 1.0, 1.0, 1.0);

    const RxCircularity proper =
        circularity_coeffs_relay_rx(draw, params, {params, 1.0, 0.0});
    CHECK(proper.received == 0.0);
    CHECK(proper.interference == 0.0);

    const ChannelDraw no_loop(4.0, 1.0, 0.0, 1.0);
    const RxCircularity quiet =
        circularity_coeffs_relay_rx(no_loop, params, {params, 1.0, 1.0});
    CHECK(quiet.received == 0.0);
    CHECK(quiet.interference == 0.0);

    const RxCircularity full =
        circularity_coeffs_relay_rx(draw, params, {params, 1.0, 1.0});
    CHECK(full.received == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    CHECK(full.interference == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("coefficients stay below one for random inputs") {
    std::mt19937_64 gen(13);
    for (int i = 0; i < 2000; ++i) {
        const SystemParams params = testsupport::random_params(gen);
        const SignalConfig sig = testsupport::random_sig(gen, params);
        const ChannelDraw draw = random_draw(gen, params);
        const RxCircularity cc =
            circularity_coeffs_relay_rx(draw, params, sig);
        CHECK(cc.received >= 0.0);
        CHECK(cc.received < 1.0);
        CHECK(cc.interference >= 0.0);
        CHECK(cc.interference < 1.0);
        CHECK(cc.received <= cc.interference + 1e-15);
    }
}

// Impropriety moves the loopback interference into one signal dimension,
// which the relay receiver tolerates better, so the first-hop rate can only
// grow with c_x; the destination decodes the relay signal itself, so the
// second-hop rate can only shrink.
TEST_CASE("circularity helps the first hop and hurts the second") {
    std::mt19937_64 gen(14);
    for (int i = 0; i < 300; ++i) {
        const SystemParams params = testsupport::random_params(gen);
        const double p_r = params.p_max * testsupport::uniform(gen, 0.1, 1.0);
        const ChannelDraw draw = random_draw(gen, params);
        double previous_sr = rate_sr(draw, params, {params, p_r, 0.0});
        double previous_rd = rate_rd(draw, params, {params, p_r, 0.0});
        for (int k = 1; k <= 32; ++k) {
            const SignalConfig sig(params, p_r, k / 32.0);
            const double r_sr = rate_sr(draw, params, sig);
            const double r_rd = rate_rd(draw, params, sig);
            CHECK(r_sr >= previous_sr - 1e-12);
            CHECK(r_rd <= previous_rd + 1e-12);
            previous_sr = r_sr;
            previous_rd = r_rd;
        }
    }
}

TEST_CASE("rates are non-negative") {
    std::mt19937_64 gen(15);
    for (int i = 0; i < 5000; ++i) {
        const SystemParams params = testsupport::random_params(gen);
        const SignalConfig sig = testsupport::random_sig(gen, params);
        const ChannelDraw draw = random_draw(gen, params);
        CHECK(rate_sr(draw, params, sig) >= 0.0);
        CHECK(rate_rd(draw, params, sig) >= 0.0);
    }
}

TEST_CASE("channel draws reject negative gains") {
    CHECK_NOTHROW(ChannelDraw(0.0, 0.0, 0.0, 0.0));
    CHECK_THROWS_AS(ChannelDraw(-1.0, 1.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(ChannelDraw(1.0, 1.0, -0.1, 1.0), std::invalid_argument);
}
