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

#include "wiretap/types.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace wiretap {

/// Per-symbol linear powers of one allocation.
struct PowerAllocation {
    std::vector<double> powers;     ///< P_i >= 0, one per subchannel
    double total = 0.0;             ///< sum of powers as stored
    RateNats achieved_rate = 0.0;   ///< sum of ln(1 + g_i P_i) under the given gains
};

/// Squared singular values of the subchannels in use, sorted descending.
/// Zero gains never appear here; the whitening rank cut removes them.
struct GainVector {
    std::vector<double> gains;
};

namespace detail {

inline void check_gains(const GainVector& gv, const char* who) {
    if (gv.gains.empty()) throw std::invalid_argument(std::string(who) + ": empty gains");
    double prev = std::numeric_limits<double>::infinity();
    for (double g : gv.gains) {
        if (!(g > 0.0)) throw std::invalid_argument(std::string(who) + ": gains must be > 0");
        if (g > prev) throw std::invalid_argument(std::string(who) + ": gains must be descending");
        prev = g;
    }
}

inline PowerAllocation finish_allocation(const GainVector& gv, std::vector<double> powers) {
    PowerAllocation alloc;
    alloc.powers = std::move(powers);
    alloc.total = std::accumulate(alloc.powers.begin(), alloc.powers.end(), 0.0);
    alloc.achieved_rate = 0.0;
    for (std::size_t i = 0; i < alloc.powers.size(); ++i)
        alloc.achieved_rate += std::log1p(gv.gains[i] * alloc.powers[i]);
    return alloc;
}

}  // namespace detail

/// Conventional water-filling: maximize sum ln(1 + g_i P_i) subject to
/// sum P_i <= budget, P_i >= 0. Returns P_i = max(0, mu - 1/g_i) with the
/// water level mu chosen so the budget is consumed exactly.
inline PowerAllocation waterfill(const GainVector& gains, double budget) {
    detail::check_gains(gains, "waterfill");
    if (budget < 0.0) throw std::invalid_argument("waterfill: budget must be >= 0");

    const auto& g = gains.gains;
    const int d = static_cast<int>(g.size());

    // Active channels form a prefix of the descending gains; scan for the
    // first prefix whose water level does not reach the next threshold.
    double inv_sum = 0.0;
    double mu = 0.0;
    int k = d;
    for (int i = 0; i < d; ++i) {
        inv_sum += 1.0 / g[static_cast<std::size_t>(i)];
        mu = (budget + inv_sum) / static_cast<double>(i + 1);
        if (i + 1 == d || mu <= 1.0 / g[static_cast<std::size_t>(i + 1)]) {
            k = i + 1;
            break;
        }
    }

    std::vector<double> powers(static_cast<std::size_t>(d), 0.0);
    for (int i = 0; i < k; ++i)
        powers[static_cast<std::size_t>(i)] = std::max(0.0, mu - 1.0 / g[static_cast<std::size_t>(i)]);
    return detail::finish_allocation(gains, std::move(powers));
}

/// Inverse water-filling: minimize sum P_i subject to
/// sum ln(1 + g_i P_i) = target_rate, P_i >= 0 (total-power constraint
/// dropped; the dimension search in the transmit design restores it).
///
/// With x_i = ln(1 + g_i P_i) the problem is convex and the KKT conditions
/// give P_i = max(0, mu - 1/g_i) where mu = -nu is the multiplier of the
/// rate-equality constraint. For a prefix active set of size k,
/// mu = exp((R - sum_{i<=k} ln g_i) / k) in closed form; the scan below picks
/// the unique prefix consistent with complementary slackness.
inline PowerAllocation inverse_waterfill(const GainVector& gains, RateNats target_rate) {
    detail::check_gains(gains, "inverse_waterfill");
    if (target_rate < 0.0) throw std::invalid_argument("inverse_waterfill: target_rate must be >= 0");

    const auto& g = gains.gains;
    const int d = static_cast<int>(g.size());
    std::vector<double> powers(static_cast<std::size_t>(d), 0.0);

    if (target_rate == 0.0) return detail::finish_allocation(gains, std::move(powers));

    double log_gain_sum = 0.0;
    double mu = 0.0;
    int k = d;
    for (int i = 0; i < d; ++i) {
        log_gain_sum += std::log(g[static_cast<std::size_t>(i)]);
        mu = std::exp((target_rate - log_gain_sum) / static_cast<double>(i + 1));
        if (i + 1 == d || mu <= 1.0 / g[static_cast<std::size_t>(i + 1)]) {
            k = i + 1;
            break;
        }
    }

    for (int i = 0; i < k; ++i)
        powers[static_cast<std::size_t>(i)] = std::max(0.0, mu - 1.0 / g[static_cast<std::size_t>(i)]);
    return detail::finish_allocation(gains, std::move(powers));
}

/// Fraction of the power budget the allocation consumes; values above 1 mean
/// the budget cannot support the allocation.
inline double power_ratio(const PowerAllocation& alloc, double p_total) {
    if (!(p_total > 0.0)) throw std::invalid_argument("power_ratio: p_total must be > 0");
    return alloc.total / p_total;
}

}  // namespace wiretap
