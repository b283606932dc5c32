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

#include <Eigen/Cholesky>
#include <Eigen/SVD>

#include <stdexcept>
#include <vector>

namespace wiretap {

/// Equivalent three-node channel after whitening the jammer's interference
/// at Bob.
struct WhitenedChannel {
    ComplexMatrix c;        ///< n_b x n_b whitening factor, C C^H = K^{-1}
    ComplexMatrix h_tilde;  ///< equivalent channel C^H H_ba, n_b x n_a
    ComplexMatrix v;        ///< full right singular vectors of h_tilde, n_a x n_a
    Eigen::VectorXd sigma;  ///< singular values of h_tilde, descending
    int c_rank = 0;         ///< number of singular values above the rank tolerance
};

/// Interference-plus-noise covariance at Bob: K = I + H_bj Q_j H_bj^H.
/// Hermitian and positive definite (every eigenvalue >= 1).
inline ComplexMatrix interference_covariance(const ComplexMatrix& h_bj, const ComplexMatrix& q_j) {
    if (q_j.rows() != q_j.cols() || q_j.rows() != h_bj.cols())
        throw std::invalid_argument("interference_covariance: shape mismatch");
    const auto n_b = h_bj.rows();
    ComplexMatrix k = ComplexMatrix::Identity(n_b, n_b) + h_bj * q_j * h_bj.adjoint();
    return ((k + k.adjoint()) * 0.5).eval();  // scrub rounding asymmetry
}

/// Whiten Bob's channel: find C with C C^H = K^{-1}, form the equivalent
/// channel H~ = C^H H_ba, and record its SVD.
///
/// C is only fixed up to a right unitary factor; we pin it to the
/// lower-triangular Cholesky factor of K^{-1}. Every downstream quantity
/// (singular values, rates, designs) is invariant to that choice.
inline WhitenedChannel whiten(const ComplexMatrix& h_ba, const ComplexMatrix& k) {
    if (k.rows() != k.cols() || k.rows() != h_ba.rows())
        throw std::invalid_argument("whiten: shape mismatch");

    const auto n_b = k.rows();
    Eigen::LLT<ComplexMatrix> llt_k(k);
    if (llt_k.info() != Eigen::Success)
        throw numerical_error("whiten: k is not positive definite within tolerance");

    ComplexMatrix k_inv = llt_k.solve(ComplexMatrix::Identity(n_b, n_b));
    k_inv = ((k_inv + k_inv.adjoint()) * 0.5).eval();

    Eigen::LLT<ComplexMatrix> llt_inv(k_inv);
    if (llt_inv.info() != Eigen::Success)
        throw numerical_error("whiten: k inverse lost positive definiteness");

    WhitenedChannel wch;
    wch.c = llt_inv.matrixL();
    wch.h_tilde = wch.c.adjoint() * h_ba;

    Eigen::JacobiSVD<ComplexMatrix> svd(wch.h_tilde, Eigen::ComputeFullU | Eigen::ComputeFullV);
    wch.sigma = svd.singularValues();
    wch.v = svd.matrixV();

    const double sigma_max = wch.sigma.size() > 0 ? wch.sigma(0) : 0.0;
    const double tol =
        static_cast<double>(std::max(h_ba.rows(), h_ba.cols())) * sigma_max * 1e-12;
    wch.c_rank = 0;
    for (Eigen::Index i = 0; i < wch.sigma.size(); ++i)
        if (wch.sigma(i) > tol) ++wch.c_rank;
    return wch;
}

/// Squared singular values (channel gains) of the top `count` equivalent
/// subchannels, descending.
inline std::vector<double> squared_singular_values(const WhitenedChannel& wch, int count) {
    if (count < 0 || count > wch.sigma.size())
        throw std::invalid_argument("squared_singular_values: count out of range");
    std::vector<double> g(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) g[static_cast<std::size_t>(i)] = wch.sigma(i) * wch.sigma(i);
    return g;
}

}  // namespace wiretap
