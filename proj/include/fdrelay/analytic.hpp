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
// Closed-form and quadrature-based outage probabilities for both hops and
// the end-to-end link, for proper and improper relay signaling.

#pragma once

#include <stdexcept>
#include <string>

#include "fdrelay/model.hpp"

namespace fdrelay {

enum class OutageKind {
    exact_quadrature,
    exact_closed_form,
    upper_bound,
    asymptotic,
};

const char* to_string(OutageKind kind);

// Per-hop and end-to-end outage probabilities; p_e2e always satisfies
// p_e2e = 1 - (1 - p_sr)(1 - p_rd).
struct OutageBreakdown {
    double p_sr;
    double p_rd;
    double p_e2e;
    OutageKind kind;
};

// Thrown when the first-hop outage integral cannot reach the requested
// tolerance; carries the achieved error estimate.
class QuadratureError : public std::runtime_error {
  public:
    QuadratureError(const std::string& what, double achieved_error_)
        : std::runtime_error(what), achieved_error(achieved_error_) {}
    double achieved_error;
};

// Exact source-relay outage probability under improper relay signaling,
// evaluated by adaptive quadrature of the self-interference average. At
// c_x = 0 this reduces to the proper-signaling closed form.
double p_sr_exact(const SystemParams& params, const SignalConfig& sig);

// Source-relay outage probability for a proper relay signal (closed form).
double p_sr_pgs(const SystemParams& params, double p_r);

// Jensen upper bound on the source-relay outage probability.
double p_sr_upper_bound(const SystemParams& params, const SignalConfig& sig);

// Exact relay-destination outage probability (closed form for any c_x; the
// c_x = 1 limit is reached exactly through the regularized psi ratio).
double p_rd_exact(const SystemParams& params, const SignalConfig& sig);

// Exact end-to-end outage probability for proper signaling (closed form).
double p_e2e_pgs(const SystemParams& params, double p_r);

// End-to-end outage upper bound: Jensen bound on the first hop composed
// with the exact second hop.
double p_e2e_upper_bound(const SystemParams& params, const SignalConfig& sig);

// c_x -> 1 limit of p_e2e_upper_bound in closed form.
double p_e2e_ub_maximally_improper(const SystemParams& params, double p_r);

// pi_rr -> inf limit of p_e2e_ub_maximally_improper at fixed relay power:
// the saturation level of the maximally improper design under unbounded
// self-interference.
double rsi_saturation_constant(const SystemParams& params, double p_r);

// Exponent of the first-hop averaging kernel exp(-f(g_rr)), written as
// sqrt(A g^2 + B g + C) - (D g + F). Concave in g_rr, which makes the
// kernel convex and yields the Jensen bound.
double jensen_argument(double g_rr, const SystemParams& params,
                       const SignalConfig& sig);

// Second derivative of jensen_argument with respect to g_rr,
// (4AC - B^2) / (4 (C + g (B + A g))^(3/2)); non-positive everywhere.
double jensen_argument_second_derivative(double g_rr,
                                         const SystemParams& params,
                                         const SignalConfig& sig);

double combine_hops(double p_sr, double p_rd);

OutageBreakdown outage_exact(const SystemParams& params,
                             const SignalConfig& sig);
OutageBreakdown outage_pgs(const SystemParams& params, double p_r);
OutageBreakdown outage_upper_bound(const SystemParams& params,
                                   const SignalConfig& sig);
OutageBreakdown outage_asymptotic(const SystemParams& params, double p_r);

}  // namespace fdrelay
