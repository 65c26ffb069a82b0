// SPDX-License-Identifier: Apache-2.0
//
// Shared helpers for the test suites: seeded random scenario generators and
// finite-difference oracles.

#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "fdrelay/model.hpp"

namespace testsupport {

struct TupleRanges {
    double power_lo, power_hi;  // p_s / p_max, log-uniform
    double gain_lo, gain_hi;    // pi_sr / pi_rd, log-uniform
    double rsi_lo, rsi_hi;      // pi_rr, log-uniform
    double sd_lo, sd_hi;        // pi_sd, log-uniform
    double rate_lo, rate_hi;    // uniform
};

// Wide coverage for algebraic identities and bounds.
inline constexpr TupleRanges kWide{0.05, 10.0, 0.5,  1e4, 0.01,
                                   1e4,  0.1,  100.0, 0.2, 2.5};

// Moderate operating points where outage probabilities stay far from the
// degenerate ends; used for optimizer-versus-grid comparisons.
inline constexpr TupleRanges kModerate{0.1, 5.0, 1.0, 1e3, 0.1,
                                       1e3, 0.2, 20.0, 0.3, 2.0};

// Narrow enough that double-precision finite differences resolve the
// analytic derivatives to well below the asserted tolerance.
inline constexpr TupleRanges kConditioned{0.1, 5.0, 1.0, 50.0, 0.5,
                                          100.0, 0.5, 5.0,  0.3, 2.0};

inline double log_uniform(std::mt19937_64& gen, double lo, double hi) {
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    return std::exp(u(gen));
}

inline double uniform(std::mt19937_64& gen, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
}

inline fdrelay::SystemParams random_params(std::mt19937_64& gen,
                                           const TupleRanges& r = kWide) {
    const double p_s = log_uniform(gen, r.power_lo, r.power_hi);
    const double p_max = log_uniform(gen, r.power_lo, r.power_hi);
    return {p_s,
            p_max,
            log_uniform(gen, r.gain_lo, r.gain_hi),
            log_uniform(gen, r.gain_lo, r.gain_hi),
            log_uniform(gen, r.rsi_lo, r.rsi_hi),
            log_uniform(gen, r.sd_lo, r.sd_hi),
            uniform(gen, r.rate_lo, r.rate_hi)};
}

inline fdrelay::SignalConfig random_sig(std::mt19937_64& gen,
                                        const fdrelay::SystemParams& params,
                                        double cx_lo = 0.0,
                                        double cx_hi = 1.0) {
    return {params, params.p_max * uniform(gen, 0.05, 1.0),
            uniform(gen, cx_lo, cx_hi)};
}

// Central first difference.
template <typename F>
double fd_derivative(const F& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

// Central second difference.
template <typename F>
double fd_second_derivative(const F& f, double x, double h) {
    return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

// Sign flips of consecutive differences outside a relative dead band;
// 0 means monotone, 1 a single turning point.
inline int direction_changes(const std::vector<double>& values) {
    double scale = 0.0;
    for (double v : values) scale = std::max(scale, std::fabs(v));
    const double dead_band = 1e-13 * std::max(scale, 1e-300);
    int previous = 0;
    int changes = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        const double d = values[i] - values[i - 1];
        const int sign = d > dead_band ? 1 : (d < -dead_band ? -1 : 0);
        if (sign == 0) continue;
        if (previous != 0 && sign != previous) ++changes;
        previous = sign;
    }
    return changes;
}

}  // namespace testsupport
