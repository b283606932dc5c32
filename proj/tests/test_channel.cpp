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

#include <catch2/catch_amalgamated.hpp>

#include "wiretap/channel.hpp"

using namespace wiretap;

TEST_CASE("gaussian matrix has the requested shape") {
    Substream rng(1, 0, StreamRole::bob_channel);
    const ComplexMatrix m = generate_gaussian_matrix(rng, 4, 6);
    CHECK(m.rows() == 4);
    CHECK(m.cols() == 6);
}

TEST_CASE("gaussian matrix rejects empty dimensions") {
    Substream rng(1, 0, StreamRole::bob_channel);
    CHECK_THROWS_AS(generate_gaussian_matrix(rng, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(generate_gaussian_matrix(rng, 3, 0), std::invalid_argument);
}

TEST_CASE("substreams are deterministic and distinct") {
    Substream a(42, 7, StreamRole::eve_channel);
    Substream b(42, 7, StreamRole::eve_channel);
    Substream c(42, 8, StreamRole::eve_channel);
    const ComplexMatrix ma = generate_gaussian_matrix(a, 4, 6);
    const ComplexMatrix mb = generate_gaussian_matrix(b, 4, 6);
    const ComplexMatrix mc = generate_gaussian_matrix(c, 4, 6);
    CHECK(ma == mb);  // bit-identical
    CHECK(ma != mc);
}

TEST_CASE("gaussian entries match CN(0,1) sample statistics") {
    Substream rng(123, 0, StreamRole::bob_channel);
    const int n = 100000;
    const ComplexMatrix m = generate_gaussian_matrix(rng, 400, 250);

    std::complex<double> mean = m.sum() / static_cast<double>(n);
    CHECK(std::abs(mean) < 0.02);

    const double var = m.squaredNorm() / static_cast<double>(n);
    CHECK(var > 0.97);
    CHECK(var < 1.03);

    // real and imaginary parts each carry half the variance
    const double var_re = m.real().squaredNorm() / static_cast<double>(n);
    CHECK_THAT(var_re, Catch::Matchers::WithinAbs(0.5, 0.02));
}

TEST_CASE("jammer covariance spreads power over antennas") {
    SECTION("zero power") {
        const ComplexMatrix q = jammer_covariance(0.0, 4);
        CHECK(q.isZero(0.0));
        CHECK(q.rows() == 4);
    }
    SECTION("unit per-antenna power") {
        const ComplexMatrix q = jammer_covariance(4.0, 4);
        CHECK(q.isApprox(ComplexMatrix::Identity(4, 4)));
    }
    SECTION("reference arithmetic") {
        const ComplexMatrix q = jammer_covariance(10.0, 4);
        for (int i = 0; i < 4; ++i) CHECK(q(i, i) == std::complex<double>(2.5, 0.0));
        CHECK_THAT(q.trace().real(), Catch::Matchers::WithinAbs(10.0, 1e-15));
        CHECK(q.isApprox(q.adjoint()));  // Hermitian, PSD by construction (diagonal >= 0)
    }
    SECTION("argument checks") {
        CHECK_THROWS_AS(jammer_covariance(-1.0, 4), std::invalid_argument);
        CHECK_THROWS_AS(jammer_covariance(1.0, 0), std::invalid_argument);
    }
}

TEST_CASE("realize_system draws the configured shapes deterministically") {
    SystemConfig cfg;  // defaults: 6/4/4/4
    const ChannelRealization r0 = realize_system(cfg, 0);
    CHECK(r0.h_ba.rows() == 4);
    CHECK(r0.h_ba.cols() == 6);
    CHECK(r0.h_bj.rows() == 4);
    CHECK(r0.h_bj.cols() == 4);
    CHECK(r0.h_ea.rows() == 4);
    CHECK(r0.h_ea.cols() == 6);

    const ChannelRealization again = realize_system(cfg, 0);
    CHECK(r0.h_ba == again.h_ba);
    CHECK(r0.h_bj == again.h_bj);
    CHECK(r0.h_ea == again.h_ea);

    const ChannelRealization r1 = realize_system(cfg, 1);
    CHECK(r0.h_ba != r1.h_ba);
    CHECK(r0.h_bj != r1.h_bj);
    CHECK(r0.h_ea != r1.h_ea);
}

TEST_CASE("realize_system validates the configuration") {
    SystemConfig cfg;
    cfg.n_e = cfg.n_a;
    CHECK_THROWS_AS(realize_system(cfg, 0), std::invalid_argument);
}
