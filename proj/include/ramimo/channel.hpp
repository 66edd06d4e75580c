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

#ifndef RAMIMO_CHANNEL_HPP
#define RAMIMO_CHANNEL_HPP

#include <armadillo>
#include <random>

namespace ramimo
{
    // Rician flat-fading MIMO channel with a fixed all-ones line-of-sight component.
    // Entries have unit second moment: |h|^2 averages to K/(K+1) + 1/(K+1) = 1.
    struct RicianParams
    {
        arma::uword n_t = 1;        // transmit antennas (rows of H)
        arma::uword n_r = 1;        // receive antennas (columns of H)
        double k_factor_db = 2.0;   // Rician K-factor in dB, ignored if pure_rayleigh
        bool pure_rayleigh = false; // true = drop the LoS term entirely (K = 0)
    };

    // Throws std::invalid_argument on zero dimensions or a non-finite K-factor.
    void validate(const RicianParams &params);

    // Draws one n_t x n_r realization. Consumes exactly 2 * n_t * n_r standard normal
    // variates from rng, column-major, real part before imaginary part. The scatter
    // part is CN(0,1) i.i.d.; the LoS part is the deterministic all-ones matrix.
    arma::cx_mat sample_rician(const RicianParams &params, std::mt19937_64 &rng);

    // Amplitude sqrt(K/(K+1)) of the LoS term for a K-factor in dB.
    double los_amplitude(double k_factor_db);
}

#endif
