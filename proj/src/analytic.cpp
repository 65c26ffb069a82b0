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

#include "fdrelay/analytic.hpp"

#include <algorithm>
#include <cmath>

#include "fdrelay/quadrature.hpp"

namespace fdrelay {

namespace {

double clamp_probability(double p) {
    return std::clamp(p, 0.0, 1.0);
}

}  // namespace

const char* to_string(OutageKind kind) {
    switch (kind) {
        case OutageKind::exact_quadrature: return "exact-quadrature";
        case OutageKind::exact_closed_form: return "exact-closed-form";
        case OutageKind::upper_bound: return "upper-bound";
        case OutageKind::asymptotic: return "asymptotic";
    }
    return "unknown";
}

double p_sr_exact(const SystemParams& params, const SignalConfig& sig) {
    const double gam = params.gamma();
    const double ps_pisr = params.p_s * params.pi_sr;
    auto kernel = [&](double g_rr) {
        const double u = sig.p_r * g_rr + 1.0;
        const double arg = sig.p_r * g_rr * sig.c_x / u;
        return std::exp(-(g_rr / params.pi_rr + u / ps_pisr * psi(arg, gam)));
    };
    // The kernel's decay rate at the origin is 1/pi_rr + P_r eta/(P_s
    // pi_sr) (exact for c_x = 0, the head rate otherwise); matching the map
    // to that length keeps the mass visible to the top-level rule even when
    // it sits far below pi_rr. Tolerance applies to the averaged value,
    // hence the pi_rr factor on the raw integral.
    const double head_rate =
        1.0 / params.pi_rr + sig.p_r * params.eta() / ps_pisr;
    const QuadResult q = integrate_semi_infinite(
        kernel, 1.0 / head_rate, tol::quadrature_abs * params.pi_rr);
    if (!q.converged)
        throw QuadratureError(
            "p_sr_exact: quadrature did not converge, achieved error " +
                std::to_string(q.abs_err / params.pi_rr),
            q.abs_err / params.pi_rr);
    return clamp_probability(1.0 - q.value / params.pi_rr);
}

double p_sr_pgs(const SystemParams& params, double p_r) {
    const double eta = params.eta();
    const double ps_pisr = params.p_s * params.pi_sr;
    return 1.0 - ps_pisr * std::exp(-eta / ps_pisr) /
                     (ps_pisr + p_r * params.pi_rr * eta);
}

double p_sr_upper_bound(const SystemParams& params, const SignalConfig& sig) {
    const double loop = sig.p_r * params.pi_rr;
    const double arg = loop * sig.c_x / (loop + 1.0);
    return 1.0 - std::exp(-(loop + 1.0) / (params.p_s * params.pi_sr) *
                          psi(arg, params.gamma()));
}

double p_rd_exact(const SystemParams& params, const SignalConfig& sig) {
    const double q =
        psi_ratio(sig.c_x, params.gamma()) / (sig.p_r * params.pi_rd);
    return 1.0 - std::exp(-q) / (params.p_s * params.pi_sd * q + 1.0);
}

double p_e2e_pgs(const SystemParams& params, double p_r) {
    const double eta = params.eta();
    const double ps_pisr = params.p_s * params.pi_sr;
    const double pr_pird = p_r * params.pi_rd;
    const double num = ps_pisr * pr_pird *
                       std::exp(-eta * (1.0 / ps_pisr + 1.0 / pr_pird));
    const double den = (ps_pisr + p_r * params.pi_rr * eta) *
                       (pr_pird + params.p_s * params.pi_sd * eta);
    return 1.0 - num / den;
}

double p_e2e_upper_bound(const SystemParams& params,
                         const SignalConfig& sig) {
    return combine_hops(p_sr_upper_bound(params, sig),
                        p_rd_exact(params, sig));
}

double p_e2e_ub_maximally_improper(const SystemParams& params, double p_r) {
    const double gam = params.gamma();
    const double loop = p_r * params.pi_rr;
    const double two_pr_pird = 2.0 * p_r * params.pi_rd;
    const double expo =
        gam / two_pr_pird + (loop + 1.0) / (params.p_s * params.pi_sr) *
                                psi(loop / (loop + 1.0), gam);
    return 1.0 - two_pr_pird * std::exp(-expo) /
                     (two_pr_pird + gam * params.p_s * params.pi_sd);
}

double rsi_saturation_constant(const SystemParams& params, double p_r) {
    const double gam = params.gamma();
    const double two_pr_pird = 2.0 * p_r * params.pi_rd;
    const double expo =
        gam / two_pr_pird + gam / (params.p_s * params.pi_sr);
    return 1.0 - two_pr_pird * std::exp(-expo) /
                     (two_pr_pird + gam * params.p_s * params.pi_sd);
}

double jensen_argument(double g_rr, const SystemParams& params,
                       const SignalConfig& sig) {
    if (!(g_rr >= 0.0))
        throw std::domain_error("jensen_argument: g_rr must be >= 0");
    const double gam = params.gamma();
    const double s2 = params.p_s * params.p_s * params.pi_sr * params.pi_sr;
    const double a = sig.p_r * sig.p_r *
                     (1.0 + gam * (1.0 - sig.c_x * sig.c_x)) / s2;
    const double b = 2.0 * (1.0 + gam) * sig.p_r / s2;
    const double c = (1.0 + gam) / s2;
    const double d = sig.p_r / (params.p_s * params.pi_sr);
    const double f = 1.0 / (params.p_s * params.pi_sr);
    return std::sqrt(c + g_rr * (b + a * g_rr)) - (d * g_rr + f);
}

double jensen_argument_second_derivative(double g_rr,
                                         const SystemParams& params,
                                         const SignalConfig& sig) {
    if (!(g_rr >= 0.0))
        throw std::domain_error(
            "jensen_argument_second_derivative: g_rr must be >= 0");
    const double gam = params.gamma();
    const double s2 = params.p_s * params.p_s * params.pi_sr * params.pi_sr;
    const double a = sig.p_r * sig.p_r *
                     (1.0 + gam * (1.0 - sig.c_x * sig.c_x)) / s2;
    const double b = 2.0 * (1.0 + gam) * sig.p_r / s2;
    const double c = (1.0 + gam) / s2;
    const double quad = c + g_rr * (b + a * g_rr);
    return (4.0 * a * c - b * b) / (4.0 * quad * std::sqrt(quad));
}

double combine_hops(double p_sr, double p_rd) {
    return 1.0 - (1.0 - p_sr) * (1.0 - p_rd);
}

OutageBreakdown outage_exact(const SystemParams& params,
                             const SignalConfig& sig) {
    const double sr = p_sr_exact(params, sig);
    const double rd = p_rd_exact(params, sig);
    return {sr, rd, combine_hops(sr, rd), OutageKind::exact_quadrature};
}

OutageBreakdown outage_pgs(const SystemParams& params, double p_r) {
    const double sr = p_sr_pgs(params, p_r);
    const double rd = p_rd_exact(params, SignalConfig(params, p_r, 0.0));
    return {sr, rd, p_e2e_pgs(params, p_r), OutageKind::exact_closed_form};
}

OutageBreakdown outage_upper_bound(const SystemParams& params,
                                   const SignalConfig& sig) {
    const double sr = p_sr_upper_bound(params, sig);
    const double rd = p_rd_exact(params, sig);
    return {sr, rd, combine_hops(sr, rd), OutageKind::upper_bound};
}

OutageBreakdown outage_asymptotic(const SystemParams& params, double p_r) {
    // Hop factorization of the saturation constant: the first hop tends to
    // 1 - exp(-gamma / (P_s pi_sr)), the second is the c_x = 1 closed form.
    const double gam = params.gamma();
    const double sr = 1.0 - std::exp(-gam / (params.p_s * params.pi_sr));
    const double rd = p_rd_exact(params, SignalConfig(params, p_r, 1.0));
    return {sr, rd, combine_hops(sr, rd), OutageKind::asymptotic};
}

}  // namespace fdrelay
