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

#include "wiretap/rng.hpp"
#include "wiretap/types.hpp"

#include <stdexcept>

namespace wiretap {

/// rows x cols matrix with i.i.d. CN(0,1) entries drawn from `rng`.
/// Entries are drawn in column-major order.
inline ComplexMatrix generate_gaussian_matrix(Substream& rng, int rows, int cols) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("generate_gaussian_matrix: dimensions must be >= 1");
    ComplexMatrix m(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) m(i, j) = rng.cgaussian();
    return m;
}

/// The jammer's transmit covariance: omni-directional noise, (p_jam/n_j) * I.
inline ComplexMatrix jammer_covariance(double p_jam, int n_j) {
    if (p_jam < 0.0) throw std::invalid_argument("jammer_covariance: p_jam must be >= 0");
    if (n_j < 1) throw std::invalid_argument("jammer_covariance: n_j must be >= 1");
    ComplexMatrix q = ComplexMatrix::Zero(n_j, n_j);
    q.diagonal().setConstant(p_jam / static_cast<double>(n_j));
    return q;
}

/// Draw the three channel matrices of trial `trial_index`. Each matrix comes
/// from its own substream keyed by (config.seed, trial_index, role), so the
/// same trial reproduces bit-identically on any thread and the draws are
/// shared across jamming-power grid points and strategies.
inline ChannelRealization realize_system(const SystemConfig& config, std::uint64_t trial_index) {
    config.validate();
    Substream s_ba(config.seed, trial_index, StreamRole::bob_channel);
    Substream s_bj(config.seed, trial_index, StreamRole::jammer_channel);
    Substream s_ea(config.seed, trial_index, StreamRole::eve_channel);
    return ChannelRealization{
        generate_gaussian_matrix(s_ba, config.n_b, config.n_a),
        generate_gaussian_matrix(s_bj, config.n_b, config.n_j),
        generate_gaussian_matrix(s_ea, config.n_e, config.n_a),
    };
}

}  // namespace wiretap
