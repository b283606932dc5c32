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

#pragma once

#include "wiretap/channel.hpp"
#include "wiretap/strategies.hpp"
#include "wiretap/whitening.hpp"

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <thread>
#include <vector>

namespace wiretap {

/// One curve of a sweep: which transmit design runs and with what parameter.
struct StrategySpec {
    enum class Kind { unknown_ecsi, statistical_ecsi };

    Kind kind = Kind::unknown_ecsi;
    RateNats target_rate = bits_to_nats(4.0);  ///< unknown-ECSI target (nats)
    int n_sim = 100;                           ///< statistical-ECSI simulation count

    std::string label() const {
        return kind == Kind::unknown_ecsi ? "unknown" : "statistical";
    }

    static StrategySpec unknown(RateNats target_rate_nats) {
        return StrategySpec{Kind::unknown_ecsi, target_rate_nats, 0};
    }
    static StrategySpec statistical(int n_sim) {
        return StrategySpec{Kind::statistical_ecsi, 0.0, n_sim};
    }
};

/// A full experiment: configuration, jamming-power grid (dB), strategies to
/// sweep, and where the CSV goes (empty path: records only, no file).
struct SweepSpec {
    SystemConfig config;
    std::vector<double> pj_grid_db;
    std::vector<StrategySpec> strategies;
    std::string output_path;
    int n_threads = 1;

    void validate() const {
        config.validate();
        if (pj_grid_db.empty()) throw std::invalid_argument("SweepSpec: empty pj grid");
        for (std::size_t i = 1; i < pj_grid_db.size(); ++i)
            if (!(pj_grid_db[i] > pj_grid_db[i - 1]))
                throw std::invalid_argument("SweepSpec: pj grid must be strictly increasing");
        if (strategies.empty()) throw std::invalid_argument("SweepSpec: no strategies");
        if (n_threads < 1) throw std::invalid_argument("SweepSpec: n_threads must be >= 1");
    }
};

/// One (jamming power, strategy) row of a sweep.
struct SweepRecord {
    double pj_db = 0.0;
    std::string strategy;
    double target_rate_bits = 0.0;  ///< 0 for the statistical strategy
    double avg_secrecy_bits = 0.0;
    double outage_fraction = 0.0;
    int n_trials = 0;
    std::uint64_t seed = 0;

    // diagnostics, not part of the CSV schema
    double se_bits = 0.0;  ///< standard error of the mean secrecy rate
    int failed = 0;        ///< trials dropped for numerical failure
};

/// Result of one Monte Carlo trial.
struct TrialOutcome {
    RateNats secrecy_nats = 0.0;
    bool outage = false;
    bool failed = false;  ///< numerical failure; excluded from averages
};

/// Trial result plus the quantities behind it, for single-trial inspection.
struct TrialDetail {
    TrialOutcome outcome;
    TransmitDesign design;
    RateNats bob_nats = 0.0;
    RateNats eve_nats = 0.0;
};

/// Run one trial: draw the channels of `trial_index`, whiten, design per the
/// strategy, and score the realized secrecy rate against the drawn true
/// eavesdropper channel.
inline TrialDetail run_trial_detailed(const SystemConfig& config, const StrategySpec& strategy,
                                      std::uint64_t trial_index) {
    TrialDetail detail;
    const ChannelRealization ch = realize_system(config, trial_index);
    const ComplexMatrix q_j = jammer_covariance(config.p_jam, config.n_j);

    WhitenedChannel wch;
    try {
        wch = whiten(ch.h_ba, interference_covariance(ch.h_bj, q_j));
    } catch (const numerical_error&) {
        detail.outcome.failed = true;
        return detail;
    }

    if (strategy.kind == StrategySpec::Kind::unknown_ecsi) {
        detail.design = design_unknown_ecsi(wch, config.n_e, config.p_total, strategy.target_rate,
                                            config.d1_init_one);
        if (detail.design.outage) {
            detail.outcome.outage = true;
            return detail;
        }
        detail.bob_nats = strategy.target_rate;
        detail.eve_nats =
            rate_eve_with_an(ch.h_ea, detail.design.w_u, information_covariance(detail.design),
                             detail.design.w_z, an_covariance(detail.design, config.p_total));
        detail.outcome.secrecy_nats = secrecy_rate(detail.bob_nats, detail.eve_nats);
    } else {
        Substream sim_rng(config.seed, trial_index, StreamRole::ecsi_simulation);
        detail.design = design_statistical_ecsi(wch, EcsiDistribution{config.n_e}, config.p_total,
                                                strategy.n_sim, sim_rng);
        detail.bob_nats = detail.design.powers.achieved_rate;
        detail.eve_nats =
            rate_eve_with_an(ch.h_ea, detail.design.w_u, information_covariance(detail.design),
                             detail.design.w_z, an_covariance(detail.design, config.p_total));
        detail.outcome.secrecy_nats = secrecy_rate(detail.bob_nats, detail.eve_nats);
    }
    return detail;
}

inline TrialOutcome run_trial(const SystemConfig& config, const StrategySpec& strategy,
                              std::uint64_t trial_index) {
    return run_trial_detailed(config, strategy, trial_index).outcome;
}

namespace detail {

/// Run trials [0, n) into a slot-per-trial vector. Workers pull indices from
/// an atomic counter, so the schedule never affects where a result lands.
inline std::vector<TrialOutcome> run_trials(const SystemConfig& config,
                                            const StrategySpec& strategy, int n, int n_threads) {
    std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(n));
    if (n_threads <= 1) {
        for (int i = 0; i < n; ++i)
            outcomes[static_cast<std::size_t>(i)] =
                run_trial(config, strategy, static_cast<std::uint64_t>(i));
        return outcomes;
    }
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1))
            outcomes[static_cast<std::size_t>(i)] =
                run_trial(config, strategy, static_cast<std::uint64_t>(i));
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_threads));
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return outcomes;
}

inline SweepRecord aggregate(const std::vector<TrialOutcome>& outcomes, double pj_db,
                             const StrategySpec& strategy, const SystemConfig& config) {
    SweepRecord rec;
    rec.pj_db = pj_db;
    rec.strategy = strategy.label();
    rec.target_rate_bits =
        strategy.kind == StrategySpec::Kind::unknown_ecsi ? nats_to_bits(strategy.target_rate) : 0.0;
    rec.n_trials = static_cast<int>(outcomes.size());
    rec.seed = config.seed;

    // Reduce strictly in trial-index order so the sums are schedule-independent.
    double sum = 0.0, sum_sq = 0.0;
    int outages = 0, failed = 0;
    for (const auto& o : outcomes) {
        if (o.failed) {
            ++failed;
            continue;
        }
        const double s = o.outage ? 0.0 : o.secrecy_nats;
        sum += s;
        sum_sq += s * s;
        if (o.outage) ++outages;
    }
    const int counted = static_cast<int>(outcomes.size()) - failed;
    rec.failed = failed;
    if (counted > 0) {
        const double mean = sum / counted;
        rec.avg_secrecy_bits = nats_to_bits(mean);
        rec.outage_fraction = static_cast<double>(outages) / counted;
        if (counted > 1) {
            const double var = std::max(0.0, (sum_sq - counted * mean * mean) / (counted - 1));
            rec.se_bits = nats_to_bits(std::sqrt(var / counted));
        }
    }
    return rec;
}

inline std::string format_sig6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace detail

/// Serialize sweep records as CSV (UTF-8, LF endings, 6 significant digits).
inline std::string to_csv(const std::vector<SweepRecord>& records) {
    std::string out = "pj_db,strategy,target_rate_bits,avg_secrecy_bits,outage_fraction,n_trials,seed\n";
    for (const auto& r : records) {
        out += detail::format_sig6(r.pj_db);
        out += ',';
        out += r.strategy;
        out += ',';
        out += detail::format_sig6(r.target_rate_bits);
        out += ',';
        out += detail::format_sig6(r.avg_secrecy_bits);
        out += ',';
        out += detail::format_sig6(r.outage_fraction);
        out += ',';
        out += std::to_string(r.n_trials);
        out += ',';
        out += std::to_string(r.seed);
        out += '\n';
    }
    return out;
}

/// Write records to `path` atomically: serialize to a sibling temporary file
/// and rename over the target, so a failed write leaves nothing behind.
inline void write_csv(const std::vector<SweepRecord>& records, const std::string& path) {
    if (records.empty()) throw std::invalid_argument("write_csv: no records");
    namespace fs = std::filesystem;
    const fs::path target(path);
    const fs::path tmp = target.string() + ".tmp";

    {
        std::ofstream ofs(tmp, std::ios::binary | std::ios::trunc);
        if (!ofs) throw io_error("write_csv: cannot open " + tmp.string());
        ofs << to_csv(records);
        ofs.flush();
        if (!ofs.good()) {
            ofs.close();
            std::error_code ec;
            fs::remove(tmp, ec);
            throw io_error("write_csv: write failed for " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        std::error_code ec2;
        fs::remove(tmp, ec2);
        throw io_error("write_csv: cannot rename onto " + path + ": " + ec.message());
    }
}

/// Run the full sweep: every (strategy, jamming power) pair over n_trials
/// seeded trials. Channel substreams are keyed by (seed, trial) only, so all
/// grid points and strategies see the same channel draws (paired samples).
/// Records come back sorted by (strategy, target rate, pj); if output_path
/// is set the CSV is written as well.
inline std::vector<SweepRecord> run_sweep(const SweepSpec& spec) {
    spec.validate();
    std::vector<SweepRecord> records;
    records.reserve(spec.pj_grid_db.size() * spec.strategies.size());

    for (const auto& strategy : spec.strategies) {
        for (double pj_db : spec.pj_grid_db) {
            SystemConfig cfg = spec.config;
            cfg.p_jam = db_to_linear(pj_db);
            const auto outcomes = detail::run_trials(cfg, strategy, cfg.n_trials, spec.n_threads);
            records.push_back(detail::aggregate(outcomes, pj_db, strategy, cfg));
        }
    }

    std::stable_sort(records.begin(), records.end(), [](const SweepRecord& a, const SweepRecord& b) {
        if (a.strategy != b.strategy) return a.strategy < b.strategy;
        if (a.target_rate_bits != b.target_rate_bits) return a.target_rate_bits < b.target_rate_bits;
        return a.pj_db < b.pj_db;
    });

    if (!spec.output_path.empty()) write_csv(records, spec.output_path);
    return records;
}

}  // namespace wiretap
