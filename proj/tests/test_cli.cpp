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
// Drives the installed binary end to end through a shell.

#include <catch2/catch_amalgamated.hpp>

#include "wiretap/experiments.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace {

struct CmdResult {
    int status = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream ifs(path, std::ios::binary);
    std::ostringstream oss;
    oss << ifs.rdbuf();
    return oss.str();
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        static int counter = 0;
        path = std::filesystem::temp_directory_path() /
               ("wiretap_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        std::filesystem::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

CmdResult run_cli(const std::string& args) {
    TempDir dir;
    const std::string out_path = dir.file("stdout");
    const std::string err_path = dir.file("stderr");
    const std::string cmd =
        std::string(WIRETAP_CLI_PATH) + " " + args + " >" + out_path + " 2>" + err_path;
    const int rc = std::system(cmd.c_str());
    CmdResult r;
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("help and version exit cleanly") {
    const auto help = run_cli("--help");
    CHECK(help.status == 0);
    CHECK(contains(help.out, "design"));
    CHECK(contains(help.out, "eval"));
    CHECK(contains(help.out, "sweep"));
    CHECK(contains(help.out, "--config"));

    const auto version = run_cli("--version");
    CHECK(version.status == 0);
    CHECK(contains(version.out, "0.1.0"));

    const auto sweep_help = run_cli("sweep --help");
    CHECK(sweep_help.status == 0);
    for (const char* flag : {"--na", "--nb", "--ne", "--nj", "--p-db", "--pj-grid", "--strategy",
                             "--rate-bits", "--n-sim", "--trials", "--seed", "--out", "--threads"})
        CHECK(contains(sweep_help.out, flag));
}

TEST_CASE("usage errors exit nonzero and name the problem") {
    const auto bad_flag = run_cli("design --no-such-flag");
    CHECK(bad_flag.status != 0);

    const auto bad_antennas = run_cli("design --na 6 --ne 6");
    CHECK(bad_antennas.status == 1);
    CHECK(contains(bad_antennas.err, "--na/--ne"));

    const auto bad_strategy = run_cli("eval --strategy sideways");
    CHECK(bad_strategy.status == 1);
    CHECK(contains(bad_strategy.err, "--strategy"));

    const auto bad_grid = run_cli("sweep --pj-grid 5:0:10");
    CHECK(bad_grid.status == 1);
    CHECK(contains(bad_grid.err, "--pj-grid"));
}

TEST_CASE("design prints the transmit design summary") {
    const auto zero_rate = run_cli("design --rate-bits 0 --seed 3");
    CHECK(zero_rate.status == 0);
    CHECK(contains(zero_rate.out, "rho: 0"));
    CHECK(contains(zero_rate.out, "outage: false"));
    CHECK(contains(zero_rate.out, "d1: "));
    CHECK(contains(zero_rate.out, "d2: "));

    // hopeless target rate: outage and the documented exit code 2
    const auto outage = run_cli("design --rate-bits 40 --pj-db 20 --seed 3");
    CHECK(outage.status == 2);
    CHECK(contains(outage.out, "outage: true"));
}

TEST_CASE("dB conversion happens at the boundary") {
    // the binary at (--p-db 10, --pj-db 6) must reproduce the library at
    // (p_total = 10, p_jam = 10^0.6) exactly
    const auto r = run_cli("eval --p-db 10 --pj-db 6 --rate-bits 4 --seed 11 --trial 2");
    REQUIRE(r.status == 0);

    wiretap::SystemConfig cfg;
    cfg.seed = 11;
    cfg.p_total = 10.0;
    cfg.p_jam = wiretap::db_to_linear(6.0);
    const auto outcome =
        wiretap::run_trial(cfg, wiretap::StrategySpec::unknown(wiretap::bits_to_nats(4.0)), 2);
    char expected[64];
    std::snprintf(expected, sizeof expected, "secrecy_rate_bits: %.6g",
                  wiretap::nats_to_bits(outcome.secrecy_nats));
    CHECK(contains(r.out, expected));
}

TEST_CASE("eval is deterministic and reports bits only") {
    const std::string args = "eval --seed 11 --trial 2 --rate-bits 4";
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(contains(a.out, "secrecy_rate_bits:"));
    CHECK(contains(a.out, "bob_rate_bits:"));
    CHECK(contains(a.out, "eve_rate_bits:"));
    CHECK_FALSE(contains(a.out, "nat"));

    const auto stat = run_cli("eval --seed 11 --trial 2 --strategy statistical --n-sim 4");
    CHECK(stat.status == 0);
    CHECK(contains(stat.out, "strategy: statistical"));
}

TEST_CASE("sweep writes a deterministic csv") {
    TempDir dir;
    const std::string out1 = dir.file("a.csv");
    const std::string out2 = dir.file("b.csv");
    const std::string flags =
        "sweep --pj-grid 0:10:20 --trials 6 --rate-bits 2 --seed 5 --strategy unknown ";
    const auto r1 = run_cli(flags + "--threads 1 --out " + out1);
    REQUIRE(r1.status == 0);
    CHECK(contains(r1.out, out1));
    const auto r2 = run_cli(flags + "--threads 2 --out " + out2);
    REQUIRE(r2.status == 0);

    const std::string csv1 = slurp(out1);
    CHECK(csv1 == slurp(out2));
    CHECK(contains(csv1,
                   "pj_db,strategy,target_rate_bits,avg_secrecy_bits,outage_fraction,n_trials,seed"));
    // 3 grid points + header
    CHECK(std::count(csv1.begin(), csv1.end(), '\n') == 4);
}

TEST_CASE("reference sweep invocation runs end to end") {
    TempDir dir;
    const std::string out = dir.file("fig3.csv");
    const auto r = run_cli("sweep --na 6 --nb 4 --ne 4 --nj 4 --p-db 10 --pj-grid 0:2:20 "
                           "--strategy unknown --rate-bits 4 --trials 2000 --seed 7 --out " +
                           out);
    REQUIRE(r.status == 0);
    const std::string csv = slurp(out);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 12);  // header + 11 grid points
    CHECK(contains(csv, "20,unknown,4,"));
}

TEST_CASE("sweep supports multiple strategies and rates") {
    TempDir dir;
    const std::string out = dir.file("multi.csv");
    const auto r = run_cli("sweep --pj-grid 0:10:10 --trials 2 --rate-bits 2,4 "
                           "--strategy unknown,statistical --n-sim 2 --seed 6 --out " +
                           out);
    REQUIRE(r.status == 0);
    const std::string csv = slurp(out);
    // (2 rates + 1 statistical) x 2 grid points + header
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
    CHECK(contains(csv, "statistical"));
    CHECK(contains(csv, "unknown"));
}

TEST_CASE("sweep to an unwritable path fails without leftovers") {
    const auto r = run_cli("sweep --pj-grid 0:10:10 --trials 1 --out /proc/wiretap_x.csv");
    CHECK(r.status == 1);
    CHECK(contains(r.err, "error"));
    CHECK_FALSE(std::filesystem::exists("/proc/wiretap_x.csv.tmp"));
}

TEST_CASE("config file merges under flags") {
    TempDir dir;
    const std::string cfg_path = dir.file("exp.ini");
    {
        std::ofstream cfg(cfg_path);
        cfg << "[sweep]\n"
            << "seed=77\n"
            << "trials=3\n"
            << "rate-bits=2\n"
            << "pj-grid=0:10:10\n"
            << "out=" << dir.file("from_config.csv") << "\n";
    }
    const auto defaults = run_cli("sweep --config " + cfg_path);
    REQUIRE(defaults.status == 0);
    const std::string csv = slurp(dir.file("from_config.csv"));
    CHECK(contains(csv, ",3,77"));  // n_trials from file, seed from file

    const auto overridden = run_cli("sweep --config " + cfg_path + " --seed 78 --out " +
                                    dir.file("override.csv"));
    REQUIRE(overridden.status == 0);
    const std::string csv2 = slurp(dir.file("override.csv"));
    CHECK(contains(csv2, ",3,78"));  // flag wins over file
}
