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

#ifndef RAMIMO_RECONFIG_HPP
#define RAMIMO_RECONFIG_HPP

#include <armadillo>

namespace ramimo
{
    // Per-element phase shifts applied by the reconfigurable antennas on both ends of the
    // link. Every coefficient has unit modulus e^{j theta}; the antennas steer phase only.
    struct ReconfigWeights
    {
        arma::cx_mat g_t;       // n_t x n_r transmit-side coefficients
        arma::cx_mat g_r;       // n_t x n_r receive-side coefficients
        bool degenerate = false; // true if some channel entry was exactly zero (phase
                                 // undefined, theta = 0 substituted)
    };

    // Equal-gain-combining weights for channel h (n_t x n_r): transmit side all-ones,
    // receive side e^{-j arg(h)} per entry, so the reconfigured channel becomes |h|.
    ReconfigWeights egc_weights(const arma::cx_mat &h);

    // Elementwise reconfigured channel g_t .* h .* g_r. Throws std::invalid_argument on
    // shape mismatch or non-unit-modulus weights (tolerance 1e-9 on |g| - 1).
    arma::cx_mat reconfigure(const arma::cx_mat &h, const ReconfigWeights &weights);

    // Validates that h_g is real up to max|Im| <= tol and returns its real part.
    // Throws std::invalid_argument if the imaginary residue exceeds tol. Used to hand an
    // equal-gain reconfigured channel to the real-valued space-time processing chain.
    arma::mat to_real_channel(const arma::cx_mat &h_g, double tol = 1e-12);
}

#endif
