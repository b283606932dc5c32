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
#include "wiretap/powalloc.hpp"
#include "wiretap/rates.hpp"
#include "wiretap/rng.hpp"
#include "wiretap/whitening.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace wiretap {

/// One transmit design: precoder, AN shaper, and the power split between
/// them. [w_u w_z] are orthonormal columns spanning all n_a dimensions;
/// information symbols carry rho * P in total and each AN symbol carries
/// (1 - rho) * P / d2.
struct TransmitDesign {
    ComplexMatrix w_u;       ///< n_a x d1 information precoder
    ComplexMatrix w_z;       ///< n_a x d2 AN shaping matrix
    PowerAllocation powers;  ///< per-symbol information powers
    double rho = 0.0;        ///< information-power fraction in [0, 1]
    int d1 = 0;              ///< information dimensions
    int d2 = 0;              ///< AN dimensions, d1 + d2 = n_a
    bool outage = false;     ///< target rate unreachable; link dropped
};

/// Eavesdropper channel distribution available to Alice under statistical
/// ECSI: i.i.d. CN(0,1) entries on n_e receive antennas.
struct EcsiDistribution {
    int n_e = 4;
};

/// Q_u as a matrix: diag of the per-symbol information powers.
inline ComplexMatrix information_covariance(const TransmitDesign& design) {
    const int d1 = static_cast<int>(design.powers.powers.size());
    ComplexMatrix q = ComplexMatrix::Zero(d1, d1);
    for (int i = 0; i < d1; ++i) q(i, i) = design.powers.powers[static_cast<std::size_t>(i)];
    return q;
}

/// Per-symbol AN power (1 - rho) P / d2; zero when no AN dimensions remain.
inline double an_symbol_power(const TransmitDesign& design, double p_total) {
    if (design.d2 == 0) return 0.0;
    return std::max(0.0, (1.0 - design.rho) * p_total / static_cast<double>(design.d2));
}

/// Q_z as a matrix: scaled identity on the d2 AN dimensions.
inline ComplexMatrix an_covariance(const TransmitDesign& design, double p_total) {
    ComplexMatrix q = ComplexMatrix::Zero(design.d2, design.d2);
    q.diagonal().setConstant(an_symbol_power(design, p_total));
    return q;
}

namespace detail {

inline GainVector top_gains(const WhitenedChannel& wch, int count) {
    return GainVector{squared_singular_values(wch, count)};
}

inline void split_precoders(const WhitenedChannel& wch, int d1, TransmitDesign& design) {
    const auto n_a = wch.v.cols();
    design.d1 = d1;
    design.d2 = static_cast<int>(n_a) - d1;
    design.w_u = wch.v.leftCols(d1);
    design.w_z = wch.v.rightCols(n_a - d1);
}

}  // namespace detail

/// Unknown-ECSI transmit design: hit the target rate with the least
/// information power, spending everything else on artificial noise.
///
/// Starts from d1 = min(n_a - n_e, c) information dimensions (or d1 = 1 when
/// start_d1_at_one is set, for an unknown eavesdropper antenna count) and
/// solves the inverse water-filling problem on the strongest d1 equivalent
/// subchannels. While the required power exceeds the budget (rho > 1) and
/// usable dimensions remain, one more dimension is moved from AN to
/// information. If every nonzero subchannel is in use and the rate is still
/// unreachable, the link is dropped: outage, zero powers, zero secrecy.
inline TransmitDesign design_unknown_ecsi(const WhitenedChannel& wch, int n_e, double p_total,
                                          RateNats target_rate, bool start_d1_at_one = false) {
    const int n_a = static_cast<int>(wch.v.cols());
    if (n_a <= n_e) throw std::invalid_argument("design_unknown_ecsi: requires n_a > n_e");
    if (wch.c_rank < 1) throw std::invalid_argument("design_unknown_ecsi: channel has no usable dimensions");
    if (target_rate < 0.0) throw std::invalid_argument("design_unknown_ecsi: target_rate must be >= 0");

    TransmitDesign design;
    int d1 = start_d1_at_one ? 1 : std::min(n_a - n_e, wch.c_rank);
    for (;;) {
        design.powers = inverse_waterfill(detail::top_gains(wch, d1), target_rate);
        const double required = design.powers.total;
        design.rho = required == 0.0 ? 0.0
                     : p_total > 0.0 ? required / p_total
                                     : std::numeric_limits<double>::infinity();
        if (design.rho <= 1.0) break;
        if (d1 >= wch.c_rank) {
            design.outage = true;
            break;
        }
        ++d1;
    }

    detail::split_precoders(wch, d1, design);
    if (design.outage) {
        std::fill(design.powers.powers.begin(), design.powers.powers.end(), 0.0);
        design.powers.total = 0.0;
        design.powers.achieved_rate = 0.0;
        design.rho = 0.0;
    }
    return design;
}

/// Realized secrecy rate of an unknown-ECSI design against a drawn
/// eavesdropper channel: target rate minus Eve's rate, clamped at zero;
/// zero in outage.
inline RateNats realized_secrecy_unknown(const TransmitDesign& design, RateNats target_rate,
                                         double p_total, const ComplexMatrix& h_ea) {
    if (design.outage) return 0.0;
    const RateNats r_e = rate_eve_with_an(h_ea, design.w_u, information_covariance(design),
                                          design.w_z, an_covariance(design, p_total));
    return secrecy_rate(target_rate, r_e);
}

namespace detail {

/// Shared evaluator for the statistical-ECSI objective. Per simulated
/// channel i it precomputes G(i) = H_ea_hat(i) V once; every (r, rho)
/// evaluation then only needs small Gram products and 4x4-scale logdets.
class StatisticalObjective {
  public:
    StatisticalObjective(const WhitenedChannel& wch, const std::vector<ComplexMatrix>& sims,
                         double p_total)
        : wch_(wch), p_total_(p_total), n_a_(static_cast<int>(wch.v.cols())) {
        g_.reserve(sims.size());
        for (const auto& h : sims) {
            if (h.cols() != wch.v.rows())
                throw std::invalid_argument("statistical objective: simulated channel shape mismatch");
            g_.push_back(h * wch_.v);
        }
    }

    int c_rank() const { return wch_.c_rank; }
    int sim_count() const { return static_cast<int>(g_.size()); }

    /// Mean over simulated channels of [R_s_hat(r, rho, i)]^+.
    double average(int r, double rho) const {
        double sum = 0.0;
        const PowerAllocation alloc = allocate(r, rho);
        for (const auto& g : g_) sum += std::max(0.0, per_sim(g, r, rho, alloc));
        return sum / static_cast<double>(g_.size());
    }

    PowerAllocation allocate(int r, double rho) const {
        return waterfill(top_gains(wch_, r), rho * p_total_);
    }

  private:
    double per_sim(const ComplexMatrix& g, int r, double rho, const PowerAllocation& alloc) const {
        // Bob's term: H~ w_u columns are orthogonal with norms sigma_i, so
        // the logdet collapses to the waterfilled rate on the top-r gains.
        const double bob = alloc.achieved_rate;

        const int d2 = n_a_ - r;
        const auto n_e = g.rows();
        const ComplexMatrix eye = ComplexMatrix::Identity(n_e, n_e);

        ComplexMatrix an = ComplexMatrix::Zero(n_e, n_e);
        if (d2 > 0) {
            const double qz = (1.0 - rho) * p_total_ / static_cast<double>(d2);
            const auto g_z = g.rightCols(d2);
            an = qz * (g_z * g_z.adjoint());
        }
        ComplexMatrix sig = ComplexMatrix::Zero(n_e, n_e);
        for (int j = 0; j < r; ++j)
            sig.noalias() += alloc.powers[static_cast<std::size_t>(j)] * (g.col(j) * g.col(j).adjoint());

        const double eve = std::max(0.0, logdet_hpd(ComplexMatrix(eye + an + sig)) -
                                             logdet_hpd(ComplexMatrix(eye + an)));
        return bob - eve;
    }

    const WhitenedChannel& wch_;
    double p_total_;
    int n_a_;
    std::vector<ComplexMatrix> g_;  // H_ea_hat(i) * V
};

/// Golden-section maximization of f on [lo, hi] to absolute tolerance tol.
template <typename F>
double golden_section_max(F&& f, double lo, double hi, double tol) {
    constexpr double inv_phi = 0.61803398874989484820;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace detail

/// Mean over the simulated eavesdropper channels of the clamped secrecy rate
/// at a fixed dimension count r and power split rho:
/// R_s_hat(r, rho, i) = ln|I + H~ W_u Q_u W_u^H H~^H| - ln|I + Phi_hat(i)|
/// with Q_u from water-filling rho*P over the top-r gains and
/// Q_z = (1 - rho) P / (n_a - r) I.
inline RateNats average_secrecy_objective(const WhitenedChannel& wch,
                                          const std::vector<ComplexMatrix>& sims, int r,
                                          double rho, double p_total) {
    if (r < 1 || r > wch.c_rank)
        throw std::invalid_argument("average_secrecy_objective: r out of range");
    if (rho < 0.0 || rho > 1.0)
        throw std::invalid_argument("average_secrecy_objective: rho must be in [0, 1]");
    if (sims.empty()) throw std::invalid_argument("average_secrecy_objective: no simulated channels");
    return detail::StatisticalObjective(wch, sims, p_total).average(r, rho);
}

/// Statistical-ECSI transmit design over explicitly provided simulated
/// eavesdropper channels.
///
/// The dimension count r is searched exhaustively over [1, c]; for each r a
/// coarse bracketing scan plus golden-section refinement (tolerance 1e-3,
/// endpoints included) maximizes the average clamped secrecy rate over
/// rho in [0, 1]. The best (r, rho) pair wins. The returned design
/// water-fills rho* P over the top-r* equivalent subchannels and spreads the
/// rest uniformly over the remaining AN dimensions. Never in outage.
inline TransmitDesign design_statistical_ecsi(const WhitenedChannel& wch,
                                              const std::vector<ComplexMatrix>& sims,
                                              double p_total) {
    if (wch.c_rank < 1)
        throw std::invalid_argument("design_statistical_ecsi: channel has no usable dimensions");
    if (sims.empty()) throw std::invalid_argument("design_statistical_ecsi: no simulated channels");

    const detail::StatisticalObjective objective(wch, sims, p_total);

    constexpr int kBracketPoints = 21;
    constexpr double kRhoTol = 1e-3;
    constexpr double kStep = 1.0 / (kBracketPoints - 1);

    int best_r = 1;
    double best_rho = 0.0;
    double best_val = -std::numeric_limits<double>::infinity();
    for (int r = 1; r <= wch.c_rank; ++r) {
        const auto f = [&](double rho) { return objective.average(r, rho); };

        // The objective need not be unimodal in rho; bracket on a coarse
        // grid first, then refine with golden section inside the winning
        // bracket and keep whichever point scores best.
        double r_rho = 0.0;
        double r_val = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < kBracketPoints; ++i) {
            const double rho = static_cast<double>(i) * kStep;
            const double val = f(rho);
            if (val > r_val) {
                r_val = val;
                r_rho = rho;
            }
        }
        const double refined = detail::golden_section_max(
            f, std::max(0.0, r_rho - kStep), std::min(1.0, r_rho + kStep), kRhoTol);
        const double refined_val = f(refined);
        if (refined_val > r_val) {
            r_val = refined_val;
            r_rho = refined;
        }

        if (r_val > best_val) {
            best_val = r_val;
            best_r = r;
            best_rho = r_rho;
        }
    }

    TransmitDesign design;
    design.rho = best_rho;
    design.powers = objective.allocate(best_r, best_rho);
    design.outage = false;
    detail::split_precoders(wch, best_r, design);
    return design;
}

/// Statistical-ECSI transmit design drawing n_sim simulated eavesdropper
/// channels from the given distribution.
inline TransmitDesign design_statistical_ecsi(const WhitenedChannel& wch,
                                              const EcsiDistribution& dist, double p_total,
                                              int n_sim, Substream& rng) {
    if (n_sim < 1) throw std::invalid_argument("design_statistical_ecsi: n_sim must be >= 1");
    if (dist.n_e < 1) throw std::invalid_argument("design_statistical_ecsi: n_e must be >= 1");
    std::vector<ComplexMatrix> sims;
    sims.reserve(static_cast<std::size_t>(n_sim));
    const int n_a = static_cast<int>(wch.v.cols());
    for (int i = 0; i < n_sim; ++i) sims.push_back(generate_gaussian_matrix(rng, dist.n_e, n_a));
    return design_statistical_ecsi(wch, sims, p_total);
}

/// Realized secrecy rate of a statistical-ECSI design against a drawn
/// eavesdropper channel: water-filled Bob rate minus Eve's rate, clamped.
inline RateNats realized_secrecy_statistical(const TransmitDesign& design, double p_total,
                                             const ComplexMatrix& h_ea) {
    const RateNats r_e = rate_eve_with_an(h_ea, design.w_u, information_covariance(design),
                                          design.w_z, an_covariance(design, p_total));
    return secrecy_rate(design.powers.achieved_rate, r_e);
}

}  // namespace wiretap
