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

#include "fdrelay/rates.hpp"

#include <cassert>
#include <cmath>

namespace fdrelay {

// Both rates are evaluated as 0.5 log2((A - B)(A + B) / den): factoring the
// difference of squares keeps the quotient accurate when B approaches A.

double rate_sr(const ChannelDraw& draw, const SystemParams& params,
               const SignalConfig& sig) {
    const double a = params.p_s * draw.g_sr + sig.p_r * draw.g_rr + 1.0;
    const double b = sig.p_r * draw.g_rr * sig.c_x;
    const double c = sig.p_r * draw.g_rr + 1.0;
    // den = (P_r g_rr (1 - c_x) + 1)(P_r g_rr (1 + c_x) + 1) > 0 whenever
    // c_x <= 1; a non-positive value indicates invalid inputs.
    const double den = (c - b) * (c + b);
    assert(den > 0.0);
    return 0.5 * std::log2(((a - b) * (a + b)) / den);
}

double rate_rd(const ChannelDraw& draw, const SystemParams& params,
               const SignalConfig& sig) {
    const double a = sig.p_r * draw.g_rd + params.p_s * draw.g_sd + 1.0;
    const double b = sig.p_r * draw.g_rd * sig.c_x;
    const double c = params.p_s * draw.g_sd + 1.0;
    return 0.5 * std::log2(((a - b) * (a + b)) / (c * c));
}

RxCircularity circularity_coeffs_relay_rx(const ChannelDraw& draw,
                                          const SystemParams& params,
                                          const SignalConfig& sig) {
    const double loop = sig.p_r * draw.g_rr * sig.c_x;
    return {loop / (params.p_s * draw.g_sr + sig.p_r * draw.g_rr + 1.0),
            loop / (sig.p_r * draw.g_rr + 1.0)};
}

}  // namespace fdrelay
