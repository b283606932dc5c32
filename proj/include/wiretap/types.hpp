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

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace wiretap {

/// Complex channel/covariance matrix. All library math is done on these.
using ComplexMatrix = Eigen::MatrixXcd;

/// Rates are carried in nats per channel use everywhere inside the library;
/// bits appear only at I/O boundaries (CLI flags, printed output, CSV).
using RateNats = double;

inline constexpr double kNatsPerBit = 0.69314718055994530942;  // ln 2

inline double nats_to_bits(double nats) { return nats / kNatsPerBit; }
inline double bits_to_nats(double bits) { return bits * kNatsPerBit; }

/// dB <-> linear power. Conversion happens at the CLI / sweep-record
/// boundary; library functions take linear powers with noise variance 1.
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

/// Thrown when a matrix factorization fails (e.g. a whitening input that is
/// not positive definite within tolerance).
class numerical_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Thrown on file output failures (sweep CSV writing).
class io_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Static system parameters of one simulation setup.
///
/// Powers are linear (unit noise variance at every receiver); target_rate is
/// in nats. Defaults reproduce the reference setup: N_A=6, N_B=N_E=N_J=4,
/// P = 10 dB, with a 4 bit/channel-use target rate.
struct SystemConfig {
    int n_a = 6;  ///< transmit antennas at Alice
    int n_b = 4;  ///< receive antennas at Bob
    int n_e = 4;  ///< receive antennas at Eve
    int n_j = 4;  ///< transmit antennas at the jammer

    double p_total = 10.0;  ///< Alice's power budget, linear
    double p_jam = 10.0;    ///< jammer's power budget, linear

    RateNats target_rate = bits_to_nats(4.0);  ///< Bob's target rate, nats

    int n_sim = 100;      ///< simulated eavesdropper channels (statistical ECSI)
    int n_trials = 2000;  ///< Monte Carlo trials per sweep point
    std::uint64_t seed = 1;

    /// Start the unknown-ECSI dimension search at d1 = 1 instead of
    /// min(n_a - n_e, c); used when the eavesdropper antenna count is unknown.
    bool d1_init_one = false;

    void validate() const {
        if (n_a < 1 || n_b < 1 || n_e < 1 || n_j < 1)
            throw std::invalid_argument("SystemConfig: antenna counts must be >= 1");
        if (n_a <= n_e)
            throw std::invalid_argument("SystemConfig: n_a must exceed n_e");
        if (p_total < 0.0) throw std::invalid_argument("SystemConfig: p_total must be >= 0");
        if (p_jam < 0.0) throw std::invalid_argument("SystemConfig: p_jam must be >= 0");
        if (target_rate < 0.0) throw std::invalid_argument("SystemConfig: target_rate must be >= 0");
        if (n_sim < 1) throw std::invalid_argument("SystemConfig: n_sim must be >= 1");
        if (n_trials < 1) throw std::invalid_argument("SystemConfig: n_trials must be >= 1");
    }
};

/// The three channel matrices of one Monte Carlo trial.
struct ChannelRealization {
    ComplexMatrix h_ba;  ///< Alice -> Bob, n_b x n_a
    ComplexMatrix h_bj;  ///< jammer -> Bob, n_b x n_j
    ComplexMatrix h_ea;  ///< Alice -> Eve, n_e x n_a
};

}  // namespace wiretap
