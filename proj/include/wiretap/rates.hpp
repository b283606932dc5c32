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
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wiretap {

namespace detail {

/// ln det A for Hermitian positive definite A, via Cholesky (sum of log
/// diagonal), falling back to an eigendecomposition if the factorization
/// fails within tolerance.
inline double logdet_hpd(const ComplexMatrix& a) {
    Eigen::LLT<ComplexMatrix> llt(a);
    if (llt.info() == Eigen::Success) {
        double ld = 0.0;
        const auto& l = llt.matrixLLT();
        for (Eigen::Index i = 0; i < a.rows(); ++i) ld += std::log(l(i, i).real());
        return 2.0 * ld;
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(a, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw numerical_error("logdet_hpd: eigendecomposition failed");
    double ld = 0.0;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        const double lambda = es.eigenvalues()(i);
        if (lambda <= 0.0) throw numerical_error("logdet_hpd: matrix is not positive definite");
        ld += std::log(lambda);
    }
    return ld;
}

inline ComplexMatrix hermitian_part(const ComplexMatrix& m) {
    return ((m + m.adjoint()) * 0.5).eval();
}

}  // namespace detail

/// ln|I + M| for Hermitian PSD M.
inline double logdet_identity_plus(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("logdet_identity_plus: square input required");
    const ComplexMatrix a =
        ComplexMatrix::Identity(m.rows(), m.cols()) + detail::hermitian_part(m);
    return std::max(0.0, detail::logdet_hpd(a));
}

/// Bob's rate in the raw four-node model:
/// ln|I + (I + H_bj Q_j H_bj^H)^{-1} H_ba Q_a H_ba^H|,
/// evaluated as ln det(K + M) - ln det(K) so both factors stay Hermitian.
inline RateNats rate_bob_raw(const ComplexMatrix& h_ba, const ComplexMatrix& h_bj,
                             const ComplexMatrix& q_j, const ComplexMatrix& q_a) {
    if (h_ba.rows() != h_bj.rows()) throw std::invalid_argument("rate_bob_raw: receive dims differ");
    if (q_j.rows() != q_j.cols() || q_j.rows() != h_bj.cols())
        throw std::invalid_argument("rate_bob_raw: q_j shape mismatch");
    if (q_a.rows() != q_a.cols() || q_a.rows() != h_ba.cols())
        throw std::invalid_argument("rate_bob_raw: q_a shape mismatch");
    const auto n_b = h_ba.rows();
    const ComplexMatrix k = ComplexMatrix::Identity(n_b, n_b) +
                            detail::hermitian_part(h_bj * q_j * h_bj.adjoint());
    const ComplexMatrix m = detail::hermitian_part(h_ba * q_a * h_ba.adjoint());
    return std::max(0.0, detail::logdet_hpd(k + m) - detail::logdet_hpd(k));
}

/// Bob's rate through the equivalent (whitened) channel: ln|I + H~ Q_a H~^H|.
inline RateNats rate_bob_equiv(const ComplexMatrix& h_tilde, const ComplexMatrix& q_a) {
    if (q_a.rows() != q_a.cols() || q_a.rows() != h_tilde.cols())
        throw std::invalid_argument("rate_bob_equiv: q_a shape mismatch");
    return logdet_identity_plus(h_tilde * q_a * h_tilde.adjoint());
}

/// Eve's rate: ln|I + H_ea Q_a H_ea^H|.
inline RateNats rate_eve(const ComplexMatrix& h_ea, const ComplexMatrix& q_a) {
    if (q_a.rows() != q_a.cols() || q_a.rows() != h_ea.cols())
        throw std::invalid_argument("rate_eve: q_a shape mismatch");
    return logdet_identity_plus(h_ea * q_a * h_ea.adjoint());
}

/// Eve's rate against a precoded signal with artificial noise:
/// ln|I + Phi| with
/// Phi = (I + H W_z Q_z W_z^H H^H)^{-1} H W_u Q_u W_u^H H^H,
/// evaluated as ln det(I + A + B) - ln det(I + A). A zero-column w_z (no AN
/// dimensions) degenerates to plain eavesdropping on the precoded signal.
inline RateNats rate_eve_with_an(const ComplexMatrix& h_eve, const ComplexMatrix& w_u,
                                 const ComplexMatrix& q_u, const ComplexMatrix& w_z,
                                 const ComplexMatrix& q_z) {
    if (w_u.rows() != h_eve.cols() || w_z.rows() != h_eve.cols())
        throw std::invalid_argument("rate_eve_with_an: precoder row count mismatch");
    if (q_u.rows() != q_u.cols() || q_u.rows() != w_u.cols())
        throw std::invalid_argument("rate_eve_with_an: q_u shape mismatch");
    if (q_z.rows() != q_z.cols() || q_z.rows() != w_z.cols())
        throw std::invalid_argument("rate_eve_with_an: q_z shape mismatch");

    const auto n_e = h_eve.rows();
    ComplexMatrix a = ComplexMatrix::Zero(n_e, n_e);
    if (w_z.cols() > 0) {
        const ComplexMatrix g_z = h_eve * w_z;
        a = detail::hermitian_part(g_z * q_z * g_z.adjoint());
    }
    const ComplexMatrix g_u = h_eve * w_u;
    const ComplexMatrix b = detail::hermitian_part(g_u * q_u * g_u.adjoint());
    const ComplexMatrix eye = ComplexMatrix::Identity(n_e, n_e);
    return std::max(0.0, detail::logdet_hpd(eye + a + b) - detail::logdet_hpd(eye + a));
}

/// Secrecy rate [R_b - R_e]^+.
inline RateNats secrecy_rate(RateNats r_b, RateNats r_e) { return std::max(0.0, r_b - r_e); }

}  // namespace wiretap
