// SPDX-License-Identifier: Apache-2.0
//
// fdrelay: outage analysis and signaling optimization for full-duplex
// decode-and-forward relays with residual self-interference
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace fdrelay {

// Named tolerances used across the library. All internal arithmetic is in
// linear units and double precision; dB appears only at the CLI boundary.
namespace tol {
inline constexpr double quadrature_abs = 1e-10;  // first-hop outage integral
inline constexpr double composition = 1e-12;     // hop product identity
inline constexpr double optimizer = 1e-10;       // default bisection bracket
}  // namespace tol

inline double db_to_linear(double x_db) {
    return std::pow(10.0, x_db / 10.0);
}

inline double linear_to_db(double x) {
    if (!(x > 0.0))
        throw std::domain_error("linear_to_db: value must be positive");
    return 10.0 * std::log10(x);
}

// SINR threshold gamma = 2^(2R) - 1 of the improper-signaling outage event.
inline double gamma_of(double rate) {
    return std::exp2(2.0 * rate) - 1.0;
}

// SNR threshold eta = 2^R - 1 of the proper-signaling outage event.
// gamma_of(R) == (eta_of(R) + 1)^2 - 1 for every R.
inline double eta_of(double rate) {
    return std::exp2(rate) - 1.0;
}

// psi(x) = sqrt(1 + gamma (1 - x^2)) - 1, continuous and non-increasing on
// [0,1]. Evaluated as gamma (1 - x^2) / (1 + sqrt(1 + gamma (1 - x^2))) so
// the value stays accurate when the radicand approaches 1.
inline double psi(double x, double gamma) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::domain_error("psi: x must lie in [0,1]");
    if (!(gamma >= 0.0))
        throw std::domain_error("psi: gamma must be non-negative");
    const double s = gamma * (1.0 - x) * (1.0 + x);
    return s / (1.0 + std::sqrt(1.0 + s));
}

// psi(x) / (1 - x^2) = gamma / (psi(x) + 2). The right-hand form is regular
// at x = 1, where the ratio tends to gamma / 2.
inline double psi_ratio(double x, double gamma) {
    return gamma / (2.0 + psi(x, gamma));
}

// Static scenario description. Gains and powers are linear; the receiver
// noise variances at relay and destination are fixed to 1 and not stored.
struct SystemParams {
    double p_s;    // source transmit power [W]
    double p_max;  // maximum allowable relay power [W]
    double pi_sr;  // mean source-relay link gain
    double pi_rd;  // mean relay-destination link gain
    double pi_rr;  // mean residual self-interference gain
    double pi_sd;  // mean source-destination link gain
    double rate;   // target rate [b/s/Hz]

    SystemParams(double p_s_, double p_max_, double pi_sr_, double pi_rd_,
                 double pi_rr_, double pi_sd_, double rate_)
        : p_s(p_s_), p_max(p_max_), pi_sr(pi_sr_), pi_rd(pi_rd_),
          pi_rr(pi_rr_), pi_sd(pi_sd_), rate(rate_) {
        check_positive(p_s, "p_s");
        check_positive(p_max, "p_max");
        check_positive(pi_sr, "pi_sr");
        check_positive(pi_rd, "pi_rd");
        check_positive(pi_rr, "pi_rr");
        check_positive(pi_sd, "pi_sd");
        check_positive(rate, "rate");
    }

    double gamma() const { return gamma_of(rate); }
    double eta() const { return eta_of(rate); }

  private:
    static void check_positive(double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::invalid_argument(std::string("SystemParams: ") + name +
                                        " must be positive and finite");
    }
};

// Relay decision variables. c_x = 0 is a proper (circularly symmetric)
// signal, c_x = 1 a maximally improper one.
struct SignalConfig {
    double p_r;  // relay transmit power [W], 0 < p_r <= p_max
    double c_x;  // circularity coefficient in [0,1]

    SignalConfig(const SystemParams& params, double p_r_, double c_x_)
        : p_r(p_r_), c_x(c_x_) {
        if (!(p_r > 0.0 && p_r <= params.p_max))
            throw std::invalid_argument(
                "SignalConfig: p_r must lie in (0, p_max]");
        if (!(c_x >= 0.0 && c_x <= 1.0))
            throw std::invalid_argument(
                "SignalConfig: c_x must lie in [0, 1]");
    }
};

}  // namespace fdrelay
