// SPDX-License-Identifier: Apache-2.0
//
// wiretap-sim — transmit design and secrecy-rate simulation for MIMO wiretap
// channels with a malicious jammer
// Copyright (C) 2026 wiretap-sim contributors
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
// Command-line front end. All rates are bits/channel-use and all powers are
// dB on this boundary; conversion to the library's linear/nats units happens
// here and nowhere deeper.

#include "wiretap/wiretap.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr const char* kVersion = "wiretap-sim 0.1.0";

struct CommonOptions {
    int na = 6, nb = 4, ne = 4, nj = 4;
    double p_db = 10.0;
    double pj_db = 10.0;
    std::uint64_t seed = 1;
    bool d1_init_one = false;
    std::string strategy = "unknown";
    std::vector<double> rate_bits{4.0};
    int n_sim = 100;

    wiretap::SystemConfig config() const {
        if (na <= ne)
            throw CLI::ValidationError("--na/--ne",
                                       "Alice needs more antennas than Eve (na > ne)");
        if (!rate_bits.empty() && rate_bits.front() < 0.0)
            throw CLI::ValidationError("--rate-bits", "target rate must be >= 0");
        wiretap::SystemConfig cfg;
        cfg.n_a = na;
        cfg.n_b = nb;
        cfg.n_e = ne;
        cfg.n_j = nj;
        cfg.p_total = wiretap::db_to_linear(p_db);
        cfg.p_jam = wiretap::db_to_linear(pj_db);
        cfg.seed = seed;
        cfg.d1_init_one = d1_init_one;
        if (!rate_bits.empty()) cfg.target_rate = wiretap::bits_to_nats(rate_bits.front());
        cfg.n_sim = n_sim;
        cfg.validate();
        return cfg;
    }

    wiretap::StrategySpec single_strategy() const {
        if (strategy == "unknown")
            return wiretap::StrategySpec::unknown(wiretap::bits_to_nats(rate_bits.front()));
        if (strategy == "statistical") return wiretap::StrategySpec::statistical(n_sim);
        throw CLI::ValidationError("--strategy", "must be 'unknown' or 'statistical'");
    }
};

void add_common_options(CLI::App* cmd, CommonOptions& opt) {
    cmd->fallthrough();  // lets --config (a top-level option) follow the subcommand
    cmd->add_option("--na", opt.na, "Alice antennas")->capture_default_str();
    cmd->add_option("--nb", opt.nb, "Bob antennas")->capture_default_str();
    cmd->add_option("--ne", opt.ne, "Eve antennas")->capture_default_str();
    cmd->add_option("--nj", opt.nj, "jammer antennas")->capture_default_str();
    cmd->add_option("--p-db", opt.p_db, "total transmit power budget, dB")->capture_default_str();
    cmd->add_option("--seed", opt.seed, "RNG seed")
        ->envname("WIRETAP_SEED")
        ->capture_default_str();
    cmd->add_flag("--d1-init-one", opt.d1_init_one,
                  "start the unknown-ECSI dimension search at d1=1 (unknown N_E)");
    cmd->add_option("--strategy", opt.strategy,
                    "transmit strategy: unknown | statistical")
        ->capture_default_str();
    cmd->add_option("--rate-bits", opt.rate_bits,
                    "target rate(s) for the unknown-ECSI strategy, bits/channel use")
        ->delimiter(',')
        ->capture_default_str();
    cmd->add_option("--n-sim", opt.n_sim, "simulated eavesdropper channels (statistical ECSI)")
        ->capture_default_str();
}

std::vector<double> parse_grid(const std::string& text) {
    // "start:step:stop", inclusive of stop
    double start = 0, step = 0, stop = 0;
    char colon1 = 0, colon2 = 0;
    std::istringstream iss(text);
    iss >> start >> colon1 >> step >> colon2 >> stop;
    if (!iss || colon1 != ':' || colon2 != ':' || !(step > 0) || stop < start)
        throw CLI::ValidationError("--pj-grid", "expected start:step:stop with step > 0");
    std::vector<double> grid;
    for (double v = start; v <= stop + 1e-9; v += step) grid.push_back(v);
    return grid;
}

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void print_design(const wiretap::TransmitDesign& design, const wiretap::StrategySpec& strategy) {
    std::cout << "strategy: " << strategy.label() << "\n";
    if (strategy.kind == wiretap::StrategySpec::Kind::unknown_ecsi)
        std::cout << "target_rate_bits: " << fmt6(wiretap::nats_to_bits(strategy.target_rate))
                  << "\n";
    std::cout << "d1: " << design.d1 << "\n";
    std::cout << "d2: " << design.d2 << "\n";
    std::cout << "rho: " << fmt6(design.rho) << "\n";
    std::cout << "outage: " << (design.outage ? "true" : "false") << "\n";
    std::cout << "powers:";
    for (double p : design.powers.powers) std::cout << ' ' << fmt6(p);
    std::cout << "\n";
    std::cout << "info_rate_bits: " << fmt6(wiretap::nats_to_bits(design.powers.achieved_rate))
              << "\n";
}

int run_design(const CommonOptions& opt, std::uint64_t trial) {
    const wiretap::SystemConfig cfg = opt.config();
    const auto strategy = opt.single_strategy();
    const auto detail = wiretap::run_trial_detailed(cfg, strategy, trial);
    if (detail.outcome.failed) {
        std::cerr << "error: trial failed numerically\n";
        return 1;
    }
    print_design(detail.design, strategy);
    return detail.design.outage ? 2 : 0;
}

int run_eval(const CommonOptions& opt, std::uint64_t trial) {
    const wiretap::SystemConfig cfg = opt.config();
    const auto strategy = opt.single_strategy();
    const auto detail = wiretap::run_trial_detailed(cfg, strategy, trial);
    if (detail.outcome.failed) {
        std::cerr << "error: trial failed numerically\n";
        return 1;
    }
    std::cout << "trial: " << trial << "\n";
    std::cout << "strategy: " << strategy.label() << "\n";
    std::cout << "outage: " << (detail.outcome.outage ? "true" : "false") << "\n";
    std::cout << "bob_rate_bits: " << fmt6(wiretap::nats_to_bits(detail.bob_nats)) << "\n";
    std::cout << "eve_rate_bits: " << fmt6(wiretap::nats_to_bits(detail.eve_nats)) << "\n";
    std::cout << "secrecy_rate_bits: " << fmt6(wiretap::nats_to_bits(detail.outcome.secrecy_nats))
              << "\n";
    return detail.outcome.outage ? 2 : 0;
}

int run_sweep_cmd(const CommonOptions& opt, const std::string& grid_text, int trials,
                  const std::string& out_path, int threads) {
    wiretap::SweepSpec spec;
    spec.config = opt.config();
    spec.config.n_trials = trials;
    spec.pj_grid_db = parse_grid(grid_text);
    spec.output_path = out_path;
    spec.n_threads = threads > 0 ? threads
                                 : std::max(1u, std::thread::hardware_concurrency());

    bool want_unknown = false, want_statistical = false;
    for (const auto& token : {opt.strategy}) {
        std::istringstream iss(token);
        std::string part;
        while (std::getline(iss, part, ',')) {
            if (part == "unknown")
                want_unknown = true;
            else if (part == "statistical")
                want_statistical = true;
            else
                throw CLI::ValidationError("--strategy", "unknown strategy '" + part + "'");
        }
    }
    if (want_unknown)
        for (double r : opt.rate_bits)
            spec.strategies.push_back(wiretap::StrategySpec::unknown(wiretap::bits_to_nats(r)));
    if (want_statistical)
        spec.strategies.push_back(wiretap::StrategySpec::statistical(opt.n_sim));

    const auto records = wiretap::run_sweep(spec);
    for (const auto& r : records)
        if (r.failed > 0)
            std::cerr << "note: " << r.failed << " trial(s) failed numerically at pj_db=" << r.pj_db
                      << " (" << r.strategy << ")\n";
    std::cout << spec.output_path << "\n";

    bool all_outage = true;
    for (const auto& r : records) all_outage = all_outage && r.outage_fraction >= 1.0;
    return all_outage ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Secure transmit design and secrecy-rate simulation for MIMO wiretap channels "
                 "with a malicious jammer"};
    app.set_version_flag("--version", kVersion);
    app.set_config("--config", "",
                   "INI config file with one section per subcommand (e.g. [sweep]); "
                   "command-line flags take precedence");
    app.require_subcommand(1);

    CommonOptions design_opt, eval_opt, sweep_opt;
    std::uint64_t design_trial = 0, eval_trial = 0;
    std::string grid_text = "0:2:20";
    std::string out_path = "sweep.csv";
    int trials = 2000;
    int threads = 0;

    auto* design = app.add_subcommand("design", "compute one transmit design and print it");
    add_common_options(design, design_opt);
    design->add_option("--pj-db", design_opt.pj_db, "jamming power, dB")->capture_default_str();
    design->add_option("--trial", design_trial, "trial index (selects the channel substream)")
        ->capture_default_str();

    auto* eval = app.add_subcommand("eval", "run one seeded trial and print realized rates");
    add_common_options(eval, eval_opt);
    eval->add_option("--pj-db", eval_opt.pj_db, "jamming power, dB")->capture_default_str();
    eval->add_option("--trial", eval_trial, "trial index (selects the channel substream)")
        ->capture_default_str();

    auto* sweep = app.add_subcommand(
        "sweep", "sweep jamming power over a grid and write average secrecy rates as CSV");
    add_common_options(sweep, sweep_opt);
    sweep->add_option("--pj-grid", grid_text, "jamming power grid, dB, as start:step:stop")
        ->capture_default_str();
    sweep->add_option("--trials", trials, "Monte Carlo trials per grid point")
        ->capture_default_str();
    sweep->add_option("--out", out_path, "output CSV path")->capture_default_str();
    sweep->add_option("--threads", threads, "worker threads (0 = all hardware threads)")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (design->parsed()) return run_design(design_opt, design_trial);
        if (eval->parsed()) return run_eval(eval_opt, eval_trial);
        return run_sweep_cmd(sweep_opt, grid_text, trials, out_path, threads);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
