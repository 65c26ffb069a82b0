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
#include <cstdint>

namespace fdrelay {

// SplitMix64 generator with keyed sub-streams. A (seed, stream) pair fully
// determines the sequence, so samples partitioned across workers stay
// reproducible: worker w consumes stream (seed, w) and nothing else.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(mix(seed)) {}

    SplitMix64(std::uint64_t seed, std::uint64_t stream)
        : state_(mix(mix(seed) ^ mix(stream * kGolden + kGolden))) {}

    std::uint64_t next_u64() {
        state_ += kGolden;
        return mix(state_);
    }

    // Uniform on (0, 1]; never returns 0, so logs are safe.
    double next_unit() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    double next_exponential(double mean) {
        return -mean * std::log(next_unit());
    }

  private:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace fdrelay
