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

#include "ramimo/reconfig.hpp"

#include <cmath>
#include <stdexcept>

namespace ramimo
{

ReconfigWeights egc_weights(const arma::cx_mat &h)
{
    if (h.n_elem == 0)
        throw std::invalid_argument("reconfig: empty channel matrix");

    ReconfigWeights w;
    w.g_t.ones(h.n_rows, h.n_cols);
    w.g_r.set_size(h.n_rows, h.n_cols);

    const std::complex<double> *src = h.memptr();
    std::complex<double> *dst = w.g_r.memptr();
    for (arma::uword i = 0; i < h.n_elem; ++i)
    {
        if (src[i] == std::complex<double>(0.0, 0.0))
        {
            dst[i] = 1.0; // phase undefined for a zero entry, theta = 0 keeps |g| = 1
            w.degenerate = true;
        }
        else
        {
            double theta = std::arg(src[i]);
            dst[i] = std::polar(1.0, -theta);
        }
    }
    return w;
}

arma::cx_mat reconfigure(const arma::cx_mat &h, const ReconfigWeights &weights)
{
    if (arma::size(weights.g_t) != arma::size(h) || arma::size(weights.g_r) != arma::size(h))
        throw std::invalid_argument("reconfig: weight shape does not match the channel");

    const double tol = 1e-9;
    if (arma::abs(arma::abs(weights.g_t) - 1.0).max() > tol ||
        arma::abs(arma::abs(weights.g_r) - 1.0).max() > tol)
        throw std::invalid_argument("reconfig: weights must have unit modulus");

    return weights.g_t % h % weights.g_r;
}

arma::mat to_real_channel(const arma::cx_mat &h_g, double tol)
{
    double residue = h_g.n_elem ? arma::abs(arma::imag(h_g)).max() : 0.0;
    if (residue > tol)
        throw std::invalid_argument("reconfig: channel is not real within tolerance");
    return arma::real(h_g);
}

}
