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
//
// Seeded Monte Carlo estimation of the outage probabilities by direct
// simulation of the block-fading model. Outage events are evaluated from
// the rate expressions themselves, keeping the simulator independent of
// the closed-form outage algebra it is used to validate.

#pragma once

#include <cstdint>

#include "fdrelay/model.hpp"
#include "fdrelay/rates.hpp"
#include "fdrelay/rng.hpp"

namespace fdrelay {

struct OutageEstimate {
    double p_hat;          // point estimate in [0,1]
    double std_err;        // binomial standard error sqrt(p(1-p)/n)
    std::uint64_t n_samples;
    std::uint64_t seed;
};

struct OutageEstimates {
    OutageEstimate sr;
    OutageEstimate rd;
    OutageEstimate e2e;
};

// One block-fading realization: four independent exponential gains with
// means (pi_sr, pi_rd, pi_rr, pi_sd), drawn in field order.
ChannelDraw sample_channel(const SystemParams& params, SplitMix64& rng);

// Estimate the per-hop and end-to-end outage probabilities from n draws.
// The two hop events depend on disjoint gain subsets of each draw, so the
// end-to-end event composes them without breaking independence.
// (seed, n, n_workers) fully determines the result; worker w consumes
// stream (seed, w) over a contiguous chunk of samples.
OutageEstimates estimate_outage(const SystemParams& params,
                                const SignalConfig& sig, std::uint64_t n,
                                std::uint64_t seed, unsigned n_workers = 1);

}  // namespace fdrelay
