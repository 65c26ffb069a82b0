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
// Outage-minimizing signaling parameters. The circularity search rests on
// the quasi-convexity of the upper bound (monotonic or unimodal in c_x),
// so bisection on the derivative finds the global optimum; exhaustive grid
// search is kept as the correctness oracle.

#pragma once

#include <string>

#include "fdrelay/analytic.hpp"
#include "fdrelay/model.hpp"

namespace fdrelay {

struct OptimResult {
    double p_r_opt;
    double c_x_opt;
    double objective;  // value of the minimized expression at the optimum
    int evals;         // objective plus derivative evaluations
    bool converged;
    std::string reason;
};

// Derivative of p_e2e_upper_bound with respect to c_x on the open interval
// (0,1). Evaluated through the closed-form factorization
//   d/dx = -x exp(...) / (d u + 1)^2 * S(x),
// written in terms of z = psi(x) + 2 so every factor stays regular up to
// the endpoints. Throws std::domain_error at c_x in {0,1}.
double ub_derivative_cx(const SystemParams& params, const SignalConfig& sig);

// Sign changes of the descending coefficient sequence of the cubic
//   T(z) = b c^2 g z^3 + b c^2 d g^2 z^2 - (a+d) g^2 t z - a d g^3 t,
// the numerator of the stationarity condition after the z substitution.
// Zero coefficients drop out of the sequence.
int descartes_sign_changes(double a, double b, double c, double d,
                           double gamma, double t_z);

// Positive-root count of the stationarity cubic for the given scenario:
// 1 for every valid parameter set (coefficient signs are (+,+,-,-)), 0 in
// the degenerate no-self-interference case. At most one interior
// stationary point of the bound follows.
int descartes_root_count(const SystemParams& params, double p_r);

// Minimize p_e2e_upper_bound over c_x in [0,1] at fixed relay power.
// Bisection on the derivative once a sign change is bracketed by the
// pre-scan; otherwise the better endpoint wins. tol bounds the final
// bracket width; the optimum does not depend on the scan resolution.
OptimResult optimize_cx(const SystemParams& params, double p_r,
                        double tol = tol::optimizer, int scan_points = 64);

// Minimize the exact proper-signaling end-to-end outage over
// p_r in (0, p_max], via bisection on the closed-form power derivative.
OptimResult optimize_power_pgs(const SystemParams& params,
                               double tol = tol::optimizer);

// Joint (p_r, c_x) minimization of the upper bound by coordinate descent:
// alternating circularity bisection and a power line search, run from a few
// starting points, until the objective improves by less than tol.
OptimResult optimize_joint(const SystemParams& params,
                           double tol = tol::optimizer);

// Closed-form derivative of p_e2e_pgs with respect to the relay power.
double pgs_power_derivative(const SystemParams& params, double p_r);

struct GridPoint {
    double p_r;
    double c_x;
    double value;
};

// Exhaustive searches used as optimizer oracles.
GridPoint grid_min_cx(const SystemParams& params, double p_r, int n_points);
GridPoint grid_min_joint(const SystemParams& params, int n_pr, int n_cx);
GridPoint grid_min_power_pgs(const SystemParams& params, int n_points);

}  // namespace fdrelay
