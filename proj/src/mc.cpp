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

#include "fdrelay/mc.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace fdrelay {

ChannelDraw sample_channel(const SystemParams& params, SplitMix64& rng) {
    const double g_sr = rng.next_exponential(params.pi_sr);
    const double g_rd = rng.next_exponential(params.pi_rd);
    const double g_rr = rng.next_exponential(params.pi_rr);
    const double g_sd = rng.next_exponential(params.pi_sd);
    return {g_sr, g_rd, g_rr, g_sd};
}

namespace {

struct OutageCounts {
    std::uint64_t sr = 0;
    std::uint64_t rd = 0;
    std::uint64_t e2e = 0;
};

OutageCounts count_outages(const SystemParams& params,
                           const SignalConfig& sig, std::uint64_t n,
                           std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 rng(seed, stream);
    OutageCounts counts;
    for (std::uint64_t i = 0; i < n; ++i) {
        const ChannelDraw draw = sample_channel(params, rng);
        const bool out_sr = rate_sr(draw, params, sig) < params.rate;
        const bool out_rd = rate_rd(draw, params, sig) < params.rate;
        counts.sr += out_sr;
        counts.rd += out_rd;
        counts.e2e += out_sr || out_rd;
    }
    return counts;
}

OutageEstimate to_estimate(std::uint64_t count, std::uint64_t n,
                           std::uint64_t seed) {
    const double p = static_cast<double>(count) / static_cast<double>(n);
    return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(n)), n, seed};
}

}  // namespace

OutageEstimates estimate_outage(const SystemParams& params,
                                const SignalConfig& sig, std::uint64_t n,
                                std::uint64_t seed, unsigned n_workers) {
    if (n < 1)
        throw std::invalid_argument("estimate_outage: n must be >= 1");
    if (n_workers < 1)
        throw std::invalid_argument("estimate_outage: n_workers must be >= 1");

    const std::uint64_t workers =
        std::min<std::uint64_t>(n_workers, n);
    std::vector<OutageCounts> partial(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
        const std::uint64_t begin = n * w / workers;
        const std::uint64_t end = n * (w + 1) / workers;
        pool.emplace_back([&, w, begin, end] {
            partial[w] = count_outages(params, sig, end - begin, seed, w);
        });
    }
    for (auto& t : pool) t.join();

    OutageCounts total;
    for (const auto& c : partial) {
        total.sr += c.sr;
        total.rd += c.rd;
        total.e2e += c.e2e;
    }
    return {to_estimate(total.sr, n, seed), to_estimate(total.rd, n, seed),
            to_estimate(total.e2e, n, seed)};
}

}  // namespace fdrelay
