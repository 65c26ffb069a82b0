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
// Config-driven experiment runner: parameter sweeps over scenarios and
// methods emitted as CSV, plus the simulation-versus-analytic validation
// harness. Config files are flat key = value text with one optional
// [scenario <label>] section per scenario; keys carrying a _db suffix are
// decibel-valued, powers are plain watts.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "fdrelay/mc.hpp"
#include "fdrelay/model.hpp"

namespace fdrelay {

enum class SweepVariable { pi_rr_db, p_max_w, pi_sr_db, relay_position };
enum class SweepMethod { pgs_mpa, pgs_opt_power, igs_1d_cx, igs_2d_joint };

const char* to_string(SweepVariable variable);
const char* to_string(SweepMethod method);

struct Scenario {
    std::string label;
    SystemParams params;
};

struct SweepSpec {
    SweepVariable variable = SweepVariable::pi_rr_db;
    double start = 0.0;
    double stop = 0.0;
    double step = 0.0;
    std::vector<SweepMethod> methods;
    bool mc_validate = false;        // append p_hat/std_err columns per row
    std::uint64_t mc_samples = 0;
    std::uint64_t seed = 0;
    double path_loss_exponent = 3.0;  // relay_position sweeps
    double gain_cap = 1e6;            // linear gain clamp near the endpoints
    std::vector<Scenario> scenarios;

    std::vector<double> grid_values() const;
};

struct SweepRow {
    double variable_value;
    std::string scenario;
    std::string method;
    double p_out;
    double p_r_used;
    double c_x_used;
    bool has_mc = false;
    double p_hat = 0.0;
    double std_err = 0.0;
};

class ConfigError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses and validates a sweep config; diagnostics carry name:line.
SweepSpec parse_sweep_config(std::istream& in, const std::string& name);

// Places the relay at a normalized distance of the source-destination
// separation: pi_sr = G position^-alpha, pi_rd = G (1-position)^-alpha with
// G anchored to the configured source-destination gain, both clamped at
// gain_cap. Positions 0 and 1 are rejected.
SystemParams relay_position_to_gains(double position,
                                     const SystemParams& base, double alpha,
                                     double gain_cap = 1e6);

// One row per (grid value, scenario, method), sorted by exactly that key.
// Deterministic for a fixed spec, including the per-row simulation seeds.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

std::string to_csv(const std::vector<SweepRow>& rows, const SweepSpec& spec);

// One validation verdict: an analytic reference against a simulated
// estimate, passing when the deviation is within the limit.
struct ValidationCheck {
    std::string name;
    double reference;
    double estimate;
    double deviation;
    double limit;
    bool pass;
};

// |estimate - reference| within n_sigmas binomial standard errors.
ValidationCheck sigma_check(const std::string& name, double reference,
                            const OutageEstimate& estimate,
                            double n_sigmas = 4.0);

// One-sided: an upper bound must not fall more than n_sigmas standard
// errors below the estimate.
ValidationCheck bound_check(const std::string& name, double bound,
                            const OutageEstimate& estimate,
                            double n_sigmas = 4.0);

// End-to-end simulation-versus-analytic suite at the default operating
// point plus seeded random scenarios. Requires n_samples >= 10^4.
std::vector<ValidationCheck> run_validation(std::uint64_t seed,
                                            std::uint64_t n_samples);

void print_validation_report(const std::vector<ValidationCheck>& checks,
                             std::ostream& out);

}  // namespace fdrelay
