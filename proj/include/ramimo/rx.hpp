// SPDX-License-Identifier: Apache-2.0
//
// ramimo - reconfigurable-antenna MIMO link-level simulator
// Copyright (C) 2026 ramimo contributors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file
// except in compliance with the License. You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0.
//
// Unless required by applicable law or agreed to in writing, software distributed under the
// License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND,
// either express or implied. See the License for the specific language governing permissions
// and limitations under the License.

#ifndef RAMIMO_RX_HPP
#define RAMIMO_RX_HPP

#include <armadillo>
#include <complex>
#include <cstdint>
#include <vector>

#include "ramimo/equiv.hpp"
#include "ramimo/modem.hpp"
#include "ramimo/stbc.hpp"

namespace ramimo
{
    struct DetectionResult
    {
        std::vector<std::complex<double>> symbols; // sliced constellation points
        std::vector<std::uint8_t> bits;            // concatenated labels, MSB first
        double metric = 0.0;                       // decision statistic, diagnostic only
        bool detectable = true;                    // false if the channel had no usable rank
    };

    // Zero-forcing detector for the real equivalent channel: s_hat = M^T y / gain,
    // sliced per symbol. gain == 0 marks the frame undetectable. When matrix^T matrix is
    // a scaled identity this is also the exact ML decision.
    DetectionResult zf_detect(const EquivalentChannel &eq, const arma::cx_vec &y,
                              const Constellation &c);

    // Exhaustive maximum-likelihood search over all symbol vectors of a linear
    // dispersion code. h_eff is the (already power-scaled) t_slots-model channel,
    // y the t_slots x n_r receive block. One constellation per symbol; pass the same
    // pointer l_symbols times for a common alphabet. Throws std::invalid_argument when
    // the candidate count exceeds 2^20.
    DetectionResult ml_detect_exhaustive(const StbcCode &code, const arma::cx_mat &h_eff,
                                         const arma::cx_mat &y,
                                         const std::vector<const Constellation *> &cs);

    // Closed-form decoder for the 2x2 complex orthogonal design (matched filter plus
    // per-symbol slicing; exact ML for that code).
    DetectionResult alamouti_detect(const arma::cx_mat &h_eff, const arma::cx_mat &y,
                                    const Constellation &c);

    // Pairwise ML decoder for the 4x4 quasi-orthogonal design. The matched-filter Gram
    // decouples into the pairs (s1,s3) and (s2,s4); each pair is searched jointly over
    // c_a x c_b, which is exact ML for this code. s1, s2 use c_a; s3, s4 use c_b.
    DetectionResult qostbc_detect(const arma::cx_mat &h_eff, const arma::cx_mat &y,
                                  const Constellation &c_a, const Constellation &c_b);

    // Open-loop spatial multiplexing baseline: one independent stream per transmit
    // antenna, y = h_eff^T x + z per slot, ZF via SVD pseudo-inverse. Singular values
    // below rank_tol * sigma_max are treated as rank loss; a rank-deficient channel
    // marks the frame undetectable.
    DetectionResult lens_zf_detect(const arma::cx_mat &h_eff, const arma::cx_vec &y,
                                   const Constellation &c, double rank_tol = 1e-10);
}

#endif
