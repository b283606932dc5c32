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

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace wiretap {

/// What a substream is used for within one trial. Each role gets an
/// independent stream so draws never shift when an unrelated count changes.
enum class StreamRole : std::uint64_t {
    bob_channel = 0,      ///< H_ba entries
    jammer_channel = 1,   ///< H_bj entries
    eve_channel = 2,      ///< H_ea entries
    ecsi_simulation = 3,  ///< simulated eavesdropper channels (Algorithm 2)
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace detail

/// Splittable random substream keyed by (seed, trial index, role).
///
/// Two substreams with the same key produce bit-identical sequences, and any
/// two distinct keys are statistically independent, so trials can run on any
/// thread in any order without changing results. The engine sequence
/// (mt19937_64) and the uniform/Gaussian mappings below are fully specified,
/// keeping outputs identical across standard library implementations.
class Substream {
  public:
    Substream(std::uint64_t seed, std::uint64_t trial, StreamRole role)
        : Substream(seed, trial, static_cast<std::uint64_t>(role)) {}

    Substream(std::uint64_t seed, std::uint64_t trial, std::uint64_t role)
        : eng_(detail::splitmix64(detail::splitmix64(detail::splitmix64(seed) ^ trial) ^ role)) {}

    /// Uniform double in [0, 1) with 53 random mantissa bits.
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    /// Circularly-symmetric complex Gaussian CN(0, 1): real and imaginary
    /// parts each N(0, 1/2), via the polar Box-Muller transform.
    std::complex<double> cgaussian() {
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-std::log1p(-u1));  // E[r^2] = 1
        const double theta = 2.0 * M_PI * u2;
        return {r * std::cos(theta), r * std::sin(theta)};
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace wiretap
