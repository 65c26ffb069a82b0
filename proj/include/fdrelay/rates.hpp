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

#include "fdrelay/model.hpp"

namespace fdrelay {

// One block-fading realization of the four link gains, g_ij = |h_ij|^2.
struct ChannelDraw {
    double g_sr;
    double g_rd;
    double g_rr;
    double g_sd;

    ChannelDraw(double g_sr_, double g_rd_, double g_rr_, double g_sd_)
        : g_sr(g_sr_), g_rd(g_rd_), g_rr(g_rr_), g_sd(g_sd_) {
        if (!(g_sr >= 0.0 && g_rd >= 0.0 && g_rr >= 0.0 && g_sd >= 0.0))
            throw std::invalid_argument("ChannelDraw: gains must be >= 0");
    }
};

// Circularity coefficients of the received and the interference-plus-noise
// signal at the relay input. Both lie in [0,1).
struct RxCircularity {
    double received;
    double interference;
};

// Achievable rate of the source-relay hop under relay self-interference,
// in b/s/Hz. Non-negative for all valid inputs.
double rate_sr(const ChannelDraw& draw, const SystemParams& params,
               const SignalConfig& sig);

// Achievable rate of the relay-destination hop with the direct-link signal
// treated as interference at the destination, in b/s/Hz.
double rate_rd(const ChannelDraw& draw, const SystemParams& params,
               const SignalConfig& sig);

RxCircularity circularity_coeffs_relay_rx(const ChannelDraw& draw,
                                          const SystemParams& params,
                                          const SignalConfig& sig);

}  // namespace fdrelay
