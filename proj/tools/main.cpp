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

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fdrelay/analytic.hpp"
#include "fdrelay/mc.hpp"
#include "fdrelay/model.hpp"
#include "fdrelay/optimize.hpp"
#include "fdrelay/sweep.hpp"

namespace {

struct ParamFlags {
    double p_s = 1.0;
    double p_max = 1.0;
    double pi_sr_db = 20.0;
    double pi_rd_db = 20.0;
    double pi_rr_db = 10.0;
    double pi_sd_db = 3.0;
    double rate = 1.0;

    fdrelay::SystemParams build() const {
        return {p_s,
                p_max,
                fdrelay::db_to_linear(pi_sr_db),
                fdrelay::db_to_linear(pi_rd_db),
                fdrelay::db_to_linear(pi_rr_db),
                fdrelay::db_to_linear(pi_sd_db),
                rate};
    }
};

void add_param_flags(CLI::App* cmd, ParamFlags& flags) {
    cmd->add_option("--p-s", flags.p_s, "Source power [W]")
        ->capture_default_str();
    cmd->add_option("--p-max", flags.p_max, "Relay power cap [W]")
        ->capture_default_str();
    cmd->add_option("--pi-sr-db", flags.pi_sr_db,
                    "Mean source-relay gain [dB]")
        ->capture_default_str();
    cmd->add_option("--pi-rd-db", flags.pi_rd_db,
                    "Mean relay-destination gain [dB]")
        ->capture_default_str();
    cmd->add_option("--pi-rr-db", flags.pi_rr_db,
                    "Mean residual self-interference gain [dB]")
        ->capture_default_str();
    cmd->add_option("--pi-sd-db", flags.pi_sd_db,
                    "Mean source-destination gain [dB]")
        ->capture_default_str();
    cmd->add_option("--rate", flags.rate, "Target rate [b/s/Hz]")
        ->capture_default_str();
}

void print_optim_result(const char* what, const fdrelay::OptimResult& r) {
    std::cout << what << "\n"
              << "  p_r_opt   = " << r.p_r_opt << " W\n"
              << "  c_x_opt   = " << r.c_x_opt << "\n"
              << "  objective = " << r.objective << "\n"
              << "  evals     = " << r.evals << "\n"
              << "  converged = " << (r.converged ? "yes" : "no") << " ("
              << r.reason << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Outage probability analysis and relay signal optimization for "
        "full-duplex decode-and-forward relaying"};
    app.require_subcommand(1);

    // The seed default can come from the environment; an explicit flag wins.
    std::uint64_t seed = 1;
    if (const char* env = std::getenv("FDRELAY_SEED")) {
        try {
            seed = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring non-integer FDRELAY_SEED\n";
        }
    }

    // eval -------------------------------------------------------------
    auto* eval = app.add_subcommand(
        "eval", "One-shot outage evaluation at a given operating point");
    ParamFlags eval_params;
    add_param_flags(eval, eval_params);
    double eval_pr = 1.0;
    double eval_cx = 0.0;
    std::uint64_t eval_mc = 0;
    eval->add_option("--p-r", eval_pr, "Relay power [W]")
        ->capture_default_str();
    eval->add_option("--c-x", eval_cx, "Circularity coefficient in [0,1]")
        ->capture_default_str();
    eval->add_option("--mc-samples", eval_mc,
                     "Also simulate with this many channel draws (0 = off)");
    eval->add_option("--seed", seed, "Simulation seed (overrides FDRELAY_SEED)");

    // optimize ----------------------------------------------------------
    auto* opt = app.add_subcommand(
        "optimize", "Minimize the end-to-end outage over the relay signal");
    ParamFlags opt_params;
    add_param_flags(opt, opt_params);
    std::string opt_mode = "cx";
    double opt_pr = 1.0;
    double opt_tol = fdrelay::tol::optimizer;
    opt->add_option("--mode", opt_mode,
                    "Optimization mode: cx | power | joint")
        ->check(CLI::IsMember({"cx", "power", "joint"}))
        ->capture_default_str();
    opt->add_option("--p-r", opt_pr,
                    "Fixed relay power for --mode cx [W]")
        ->capture_default_str();
    opt->add_option("--tol", opt_tol, "Bisection tolerance")
        ->capture_default_str();

    // sweep --------------------------------------------------------------
    auto* sweep = app.add_subcommand(
        "sweep", "Run a config-driven sweep and write a CSV table");
    std::string sweep_config;
    std::string sweep_out;
    bool sweep_seed_set = false;
    sweep->add_option("--config", sweep_config, "Sweep config file")
        ->required()
        ->check(CLI::ExistingFile);
    sweep->add_option("--out", sweep_out, "Output CSV path")->required();
    sweep
        ->add_option_function<std::uint64_t>(
            "--seed",
            [&](std::uint64_t s) {
                seed = s;
                sweep_seed_set = true;
            },
            "Override the config seed")
        ->expected(1);

    // validate -----------------------------------------------------------
    auto* validate = app.add_subcommand(
        "validate", "Run the simulation-versus-analytic validation suite");
    std::uint64_t validate_samples = 1000000;
    validate
        ->add_option("--samples", validate_samples,
                     "Monte Carlo draws per check (>= 10^4)")
        ->capture_default_str();
    validate->add_option("--seed", seed,
                         "Simulation seed (overrides FDRELAY_SEED)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*eval) {
            const fdrelay::SystemParams params = eval_params.build();
            const fdrelay::SignalConfig sig(params, eval_pr, eval_cx);
            const fdrelay::OutageBreakdown exact =
                fdrelay::outage_exact(params, sig);
            const fdrelay::OutageBreakdown bound =
                fdrelay::outage_upper_bound(params, sig);
            std::cout << "p_sr (exact)        = " << exact.p_sr << "\n"
                      << "p_rd (exact)        = " << exact.p_rd << "\n"
                      << "p_e2e (exact)       = " << exact.p_e2e << "\n"
                      << "p_sr (upper bound)  = " << bound.p_sr << "\n"
                      << "p_e2e (upper bound) = " << bound.p_e2e << "\n";
            if (eval_cx == 0.0) {
                std::cout << "p_e2e (pgs closed form) = "
                          << fdrelay::p_e2e_pgs(params, eval_pr) << "\n";
            }
            std::cout << "saturation constant = "
                      << fdrelay::rsi_saturation_constant(params, eval_pr)
                      << "\n";
            if (eval_mc > 0) {
                const fdrelay::OutageEstimates est = fdrelay::estimate_outage(
                    params, sig, eval_mc, seed);
                std::cout << "simulated p_sr  = " << est.sr.p_hat << " +- "
                          << est.sr.std_err << "\n"
                          << "simulated p_rd  = " << est.rd.p_hat << " +- "
                          << est.rd.std_err << "\n"
                          << "simulated p_e2e = " << est.e2e.p_hat << " +- "
                          << est.e2e.std_err << " (seed " << seed << ")\n";
            }
        } else if (*opt) {
            const fdrelay::SystemParams params = opt_params.build();
            if (opt_mode == "cx") {
                print_optim_result(
                    "circularity optimization at fixed relay power",
                    fdrelay::optimize_cx(params, opt_pr, opt_tol));
            } else if (opt_mode == "power") {
                print_optim_result(
                    "proper-signaling relay power optimization",
                    fdrelay::optimize_power_pgs(params, opt_tol));
            } else {
                print_optim_result(
                    "joint power and circularity optimization",
                    fdrelay::optimize_joint(params, opt_tol));
            }
        } else if (*sweep) {
            std::ifstream in(sweep_config);
            if (!in) {
                std::cerr << "error: cannot open " << sweep_config << "\n";
                return 1;
            }
            fdrelay::SweepSpec spec =
                fdrelay::parse_sweep_config(in, sweep_config);
            if (sweep_seed_set) spec.seed = seed;
            const std::vector<fdrelay::SweepRow> rows =
                fdrelay::run_sweep(spec);
            std::ofstream out(sweep_out, std::ios::binary);
            if (!out) {
                std::cerr << "error: cannot write " << sweep_out << "\n";
                return 1;
            }
            out << fdrelay::to_csv(rows, spec);
            std::cout << "wrote " << rows.size() << " rows to " << sweep_out
                      << "\n";
        } else if (*validate) {
            const std::vector<fdrelay::ValidationCheck> checks =
                fdrelay::run_validation(seed, validate_samples);
            fdrelay::print_validation_report(checks, std::cout);
            const bool ok =
                std::all_of(checks.begin(), checks.end(),
                            [](const auto& c) { return c.pass; });
            std::cout << (ok ? "all checks passed" : "validation FAILED")
                      << " (samples=" << validate_samples << ", seed=" << seed
                      << ")\n";
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
