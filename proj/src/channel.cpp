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

#include "ramimo/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace ramimo
{

void validate(const RicianParams &params)
{
    if (params.n_t == 0 || params.n_r == 0)
        throw std::invalid_argument("channel: antenna counts must be positive");
    if (!params.pure_rayleigh && !std::isfinite(params.k_factor_db))
        throw std::invalid_argument("channel: K-factor must be finite");
}

double los_amplitude(double k_factor_db)
{
    double k = std::pow(10.0, 0.1 * k_factor_db);
    return std::sqrt(k / (k + 1.0));
}

arma::cx_mat sample_rician(const RicianParams &params, std::mt19937_64 &rng)
{
    validate(params);

    double a = 0.0, b = 1.0; // LoS and scatter amplitudes, a^2 + b^2 = 1
    if (!params.pure_rayleigh)
    {
        double k = std::pow(10.0, 0.1 * params.k_factor_db);
        a = std::sqrt(k / (k + 1.0));
        b = std::sqrt(1.0 / (k + 1.0));
    }

    std::normal_distribution<double> gauss(0.0, 1.0);
    const double scatter_scale = b * M_SQRT1_2; // per real component of CN(0,1)

    arma::cx_mat h(params.n_t, params.n_r);
    std::complex<double> *p = h.memptr(); // column-major
    for (arma::uword i = 0; i < h.n_elem; ++i)
    {
        double re = gauss(rng);
        double im = gauss(rng);
        p[i] = std::complex<double>(a + scatter_scale * re, scatter_scale * im);
    }
    return h;
}

}
