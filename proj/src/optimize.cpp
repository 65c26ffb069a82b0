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

#include "fdrelay/optimize.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace fdrelay {

namespace {

constexpr int kScanPoints = 64;
constexpr int kMaxBisect = 200;
constexpr int kMaxRounds = 50;

void check_tol(double tol) {
    if (!(tol > 0.0))
        throw std::invalid_argument("optimizer: tol must be > 0");
}

}  // namespace

double ub_derivative_cx(const SystemParams& params, const SignalConfig& sig) {
    const double x = sig.c_x;
    if (!(x > 0.0 && x < 1.0))
        throw std::domain_error(
            "ub_derivative_cx: defined on the open interval (0,1)");

    const double gam = params.gamma();
    const double a = 1.0 / (sig.p_r * params.pi_rd);
    const double b = (sig.p_r * params.pi_rr + 1.0) /
                     (params.p_s * params.pi_sr);
    const double c = sig.p_r * params.pi_rr / (sig.p_r * params.pi_rr + 1.0);
    const double d = params.p_s * params.pi_sd / (sig.p_r * params.pi_rd);

    const double ps = psi(x, gam);
    const double ps_c = psi(c * x, gam);
    const double z = ps + 2.0;
    // u = psi(x)/(1-x^2), w = psi(x)^2/((psi(x)+1)(1-x^2)^2); both written
    // through z so they stay finite as x -> 1.
    const double u = gam / z;
    const double w = gam * gam / (z * z * (z - 1.0));
    const double s = (d * u + 1.0) * (-a * w + b * gam * c * c / (ps_c + 1.0)) -
                     d * w;
    const double denom = d * u + 1.0;
    const double dfbar = x * std::exp(-a * u - b * ps_c) / (denom * denom) * s;
    return -dfbar;  // the bound is 1 - fbar(x)
}

int descartes_sign_changes(double a, double b, double c, double d,
                           double gamma, double t_z) {
    const std::array<double, 4> coeff = {
        b * c * c * gamma,
        b * c * c * d * gamma * gamma,
        -(a + d) * gamma * gamma * t_z,
        -a * d * gamma * gamma * gamma * t_z,
    };
    int changes = 0;
    int prev = 0;
    for (double v : coeff) {
        if (v == 0.0) continue;
        const int sign = v > 0.0 ? 1 : -1;
        if (prev != 0 && sign != prev) ++changes;
        prev = sign;
    }
    return changes;
}

int descartes_root_count(const SystemParams& params, double p_r) {
    if (!(p_r > 0.0 && p_r <= params.p_max))
        throw std::invalid_argument(
            "descartes_root_count: p_r must lie in (0, p_max]");
    const double gam = params.gamma();
    const double a = 1.0 / (p_r * params.pi_rd);
    const double b = (p_r * params.pi_rr + 1.0) /
                     (params.p_s * params.pi_sr);
    const double c = p_r * params.pi_rr / (p_r * params.pi_rr + 1.0);
    const double d = params.p_s * params.pi_sd / (p_r * params.pi_rd);

    // Coefficient signs do not depend on where in the feasible band
    // z in [2, 1 + sqrt(1+gamma)] the sequence is formed; use the midpoint.
    const double z = 0.5 * (2.0 + 1.0 + std::sqrt(1.0 + gam));
    const double x = std::sqrt(std::max(0.0, 1.0 - z * (z - 2.0) / gam));
    const double t_z = (psi(c * x, gam) + 1.0) / (z - 1.0);
    return descartes_sign_changes(a, b, c, d, gam, t_z);
}

namespace {

struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
    bool found = false;
};

// Scan f' on a uniform grid and bracket every minus-to-plus sign change
// (each one a local minimum of the primitive). When the primitive is known
// to descend into the interval from the lo edge (negative_at_lo), a
// positive derivative at the first point brackets a minimum against the
// edge itself. hi_probe adds one extra evaluation near the right edge so a
// turning point between the last uniform point and the edge is not missed.
template <typename Deriv>
std::vector<Bracket> scan_for_minima(const Deriv& deriv, double lo, double hi,
                                     int points, bool negative_at_lo,
                                     double lo_floor, double hi_probe) {
    std::vector<Bracket> brackets;
    double prev_x = negative_at_lo ? lo_floor : 0.0;
    double prev_s = negative_at_lo ? -1.0 : 0.0;
    bool have_prev = negative_at_lo;
    auto visit = [&](double x) {
        const double s = deriv(x);
        if (s == 0.0) {
            brackets.push_back({x, x, true});
        } else if (have_prev && prev_s < 0.0 && s > 0.0) {
            brackets.push_back({prev_x, x, true});
        }
        prev_x = x;
        prev_s = s;
        have_prev = true;
    };
    for (int i = 1; i <= points; ++i)
        visit(lo + (hi - lo) * static_cast<double>(i) /
                       static_cast<double>(points + 1));
    if (hi_probe > prev_x) visit(hi_probe);
    return brackets;
}

// Shrink a minus-to-plus derivative bracket below tol; returns the midpoint.
template <typename Deriv>
double bisect_derivative(const Deriv& deriv, Bracket bracket, double tol,
                         bool& converged) {
    converged = true;
    int iter = 0;
    while (bracket.hi - bracket.lo > tol) {
        if (++iter > kMaxBisect) {
            converged = false;
            break;
        }
        const double mid = 0.5 * (bracket.lo + bracket.hi);
        const double s = deriv(mid);
        if (s == 0.0) return mid;
        (s < 0.0 ? bracket.lo : bracket.hi) = mid;
    }
    return 0.5 * (bracket.lo + bracket.hi);
}

template <typename Func>
double golden_section_min(const Func& f, double lo, double hi, double tol) {
    constexpr double kRatio = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - kRatio * (b - a);
    double x2 = a + kRatio * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kRatio * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kRatio * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

OptimResult optimize_cx(const SystemParams& params, double p_r, double tol,
                        int scan_points) {
    check_tol(tol);
    if (scan_points < 2)
        throw std::invalid_argument("optimize_cx: scan_points must be >= 2");
    int evals = 0;
    auto objective = [&](double cx) {
        ++evals;
        return p_e2e_upper_bound(params, SignalConfig(params, p_r, cx));
    };
    auto deriv = [&](double cx) {
        ++evals;
        return ub_derivative_cx(params, SignalConfig(params, p_r, cx));
    };

    double best_x = 0.0;
    double best_v = objective(0.0);
    const double v_one = objective(1.0);
    if (v_one < best_v) {
        best_x = 1.0;
        best_v = v_one;
    }

    // At most one interior stationary point exists; the vector form only
    // guards against scan artifacts.
    const std::vector<Bracket> brackets = scan_for_minima(
        deriv, 0.0, 1.0, scan_points, false, 0.0, 1.0 - 1e-12);
    bool converged = true;
    std::string reason = "monotone derivative: endpoint optimum";
    for (const Bracket& bracket : brackets) {
        bool ok = true;
        const double x_star = bisect_derivative(deriv, bracket, tol, ok);
        converged = converged && ok;
        const double v_star = objective(x_star);
        if (v_star < best_v) {
            best_x = x_star;
            best_v = v_star;
        }
        reason = ok ? "interior stationary point bracketed below tol"
                    : "bisection iteration limit reached";
    }
    return {p_r, best_x, best_v, evals, converged, reason};
}

double pgs_power_derivative(const SystemParams& params, double p_r) {
    if (!(p_r > 0.0))
        throw std::domain_error("pgs_power_derivative: p_r must be > 0");
    const double eta = params.eta();
    const double success = 1.0 - p_e2e_pgs(params, p_r);
    const double dlog_success =
        1.0 / p_r + eta / (p_r * p_r * params.pi_rd) -
        params.pi_rr * eta /
            (params.p_s * params.pi_sr + p_r * params.pi_rr * eta) -
        params.pi_rd /
            (p_r * params.pi_rd + params.p_s * params.pi_sd * eta);
    return -success * dlog_success;
}

OptimResult optimize_power_pgs(const SystemParams& params, double tol) {
    check_tol(tol);
    int evals = 0;
    auto objective = [&](double p) {
        ++evals;
        return p_e2e_pgs(params, p);
    };
    auto deriv = [&](double p) {
        ++evals;
        return pgs_power_derivative(params, p);
    };

    // The outage tends to 1 as p_r -> 0 (the derivative is negative at the
    // left edge), so only the cap and stationary points can be optimal; a
    // breakeven sitting below the first scan point is bracketed against
    // the edge.
    double best_p = params.p_max;
    double best_v = objective(best_p);

    const std::vector<Bracket> brackets =
        scan_for_minima(deriv, 0.0, params.p_max, kScanPoints, true,
                        params.p_max * 1e-12, params.p_max);
    bool converged = true;
    std::string reason = "outage decreasing in power: cap optimum";
    for (const Bracket& bracket : brackets) {
        bool ok = true;
        const double p_star = bisect_derivative(deriv, bracket, tol, ok);
        converged = converged && ok;
        const double v_star = objective(p_star);
        if (v_star < best_v) {
            best_p = p_star;
            best_v = v_star;
        }
        reason = ok ? "interior breakeven power bracketed below tol"
                    : "bisection iteration limit reached";
    }
    return {best_p, 0.0, best_v, evals, converged, reason};
}

namespace {

// Power line search of the upper bound at fixed circularity. Bisects a
// central-difference derivative when a sign change is bracketed; otherwise
// the bound is only observed (not proven) unimodal in the power, so fall
// back to golden section over the full range.
struct LineMin {
    double arg;
    double value;
};

LineMin minimize_power_ub(const SystemParams& params, double cx, double tol,
                          int& evals) {
    auto objective = [&](double p) {
        ++evals;
        return p_e2e_upper_bound(params, SignalConfig(params, p, cx));
    };
    // Point-relative step keeps p - h positive all the way down to the
    // left-edge bracket.
    auto fd_deriv = [&](double p) {
        const double h = 1e-7 * p;
        return (objective(p + h) - objective(p - h)) / (2.0 * h);
    };

    double best_p = params.p_max;
    double best_v = objective(best_p);

    // Scan strictly inside (0, p_max) so the centered differences stay in
    // range. The bound also tends to 1 at zero power, so a minimum below
    // the first scan point is bracketed against the left edge.
    const double interior_hi =
        params.p_max * static_cast<double>(kScanPoints) /
        static_cast<double>(kScanPoints + 1);
    const std::vector<Bracket> brackets = scan_for_minima(
        fd_deriv, 0.0, interior_hi, kScanPoints, true, params.p_max * 1e-9,
        params.p_max * (1.0 - 2e-7));
    std::vector<double> candidates;
    for (const Bracket& bracket : brackets) {
        bool converged = true;
        candidates.push_back(
            bisect_derivative(fd_deriv, bracket, tol, converged));
    }
    if (candidates.empty()) {
        // Finite differences found no crossing; fall back to a section
        // search under the observed unimodality.
        candidates.push_back(golden_section_min(
            objective, params.p_max * 1e-9, params.p_max, tol));
    }
    for (double p_star : candidates) {
        const double v_star = objective(p_star);
        if (v_star < best_v) {
            best_p = p_star;
            best_v = v_star;
        }
    }
    return {best_p, best_v};
}

struct CdState {
    double p_r;
    double c_x;
    double value;
    bool converged;
    int rounds;
};

CdState coordinate_descent(const SystemParams& params, double start_pr,
                           double start_cx, bool cx_first, double tol,
                           int& evals) {
    const double inner_tol = std::min(tol, 1e-10);
    double p_r = start_pr;
    double c_x = start_cx;
    double value = p_e2e_upper_bound(params, SignalConfig(params, p_r, c_x));
    ++evals;

    double best_pr = p_r, best_cx = c_x, best_value = value;
    bool converged = false;
    int round = 0;
    for (; round < kMaxRounds; ++round) {
        const double before = value;
        if (cx_first || round > 0) {
            const OptimResult step = optimize_cx(params, p_r, inner_tol);
            evals += step.evals;
            c_x = step.c_x_opt;
            value = step.objective;
        }
        const LineMin power =
            minimize_power_ub(params, c_x, inner_tol * params.p_max, evals);
        p_r = power.arg;
        value = power.value;

        if (value < best_value) {
            best_pr = p_r;
            best_cx = c_x;
            best_value = value;
        }
        if (std::fabs(before - value) < tol) {
            converged = true;
            break;
        }
    }
    return {best_pr, best_cx, best_value, converged, round + 1};
}

}  // namespace

OptimResult optimize_joint(const SystemParams& params, double tol) {
    check_tol(tol);
    int evals = 0;

    // A few starts guard against distinct coordinate-descent fixed points.
    const std::array<std::tuple<double, double, bool>, 3> starts = {{
        {params.p_max, 0.0, true},
        {params.p_max, 1.0, false},
        {0.5 * params.p_max, 0.5, true},
    }};

    CdState best{params.p_max, 0.0, 2.0, false, 0};
    for (const auto& [pr0, cx0, cx_first] : starts) {
        const CdState run =
            coordinate_descent(params, pr0, cx0, cx_first, tol, evals);
        if (run.value < best.value) best = run;
    }

    const std::string reason =
        best.converged
            ? "coordinate descent converged in " +
                  std::to_string(best.rounds) + " rounds (best of 3 starts)"
            : "round limit reached; best visited point returned";
    return {best.p_r, best.c_x, best.value, evals, best.converged, reason};
}

GridPoint grid_min_cx(const SystemParams& params, double p_r, int n_points) {
    if (n_points < 2)
        throw std::invalid_argument("grid_min_cx: need at least 2 points");
    GridPoint best{p_r, 0.0, 2.0};
    for (int i = 0; i < n_points; ++i) {
        const double cx =
            static_cast<double>(i) / static_cast<double>(n_points - 1);
        const double v =
            p_e2e_upper_bound(params, SignalConfig(params, p_r, cx));
        if (v < best.value) best = {p_r, cx, v};
    }
    return best;
}

GridPoint grid_min_joint(const SystemParams& params, int n_pr, int n_cx) {
    if (n_pr < 1 || n_cx < 2)
        throw std::invalid_argument("grid_min_joint: grid too small");
    GridPoint best{params.p_max, 0.0, 2.0};
    for (int j = 0; j < n_pr; ++j) {
        // Fraction first: the last grid point must be exactly p_max.
        const double p_r = params.p_max * (static_cast<double>(j + 1) /
                                           static_cast<double>(n_pr));
        for (int i = 0; i < n_cx; ++i) {
            const double cx =
                static_cast<double>(i) / static_cast<double>(n_cx - 1);
            const double v =
                p_e2e_upper_bound(params, SignalConfig(params, p_r, cx));
            if (v < best.value) best = {p_r, cx, v};
        }
    }
    return best;
}

GridPoint grid_min_power_pgs(const SystemParams& params, int n_points) {
    if (n_points < 1)
        throw std::invalid_argument("grid_min_power_pgs: grid too small");
    GridPoint best{params.p_max, 0.0, 2.0};
    for (int i = 0; i < n_points; ++i) {
        const double p_r = params.p_max * (static_cast<double>(i + 1) /
                                           static_cast<double>(n_points));
        const double v = p_e2e_pgs(params, p_r);
        if (v < best.value) best = {p_r, 0.0, v};
    }
    return best;
}

}  // namespace fdrelay
