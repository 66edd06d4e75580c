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

#include "ramimo/equiv.hpp"

#include <stdexcept>

namespace ramimo
{

EquivalentChannel build_equivalent_channel(const StbcCode &code, const arma::mat &h_g)
{
    if (code.kind != CodeKind::hurwitz_radon)
        throw std::invalid_argument("equiv: only rate-one real designs have a real "
                                    "equivalent channel");
    if (h_g.n_rows != code.n_t)
        throw std::invalid_argument("equiv: channel rows do not match the antenna count");
    if (h_g.n_cols == 0)
        throw std::invalid_argument("equiv: channel has no receive antennas");

    const arma::uword t = code.t_slots;
    const arma::uword n_r = h_g.n_cols;

    // Column l holds, stacked per receive antenna, the slot responses a[l] * h_g(:,r).
    EquivalentChannel eq;
    eq.matrix.zeros(t * n_r, code.l_symbols);
    for (arma::uword l = 0; l < code.l_symbols; ++l)
    {
        const arma::imat &a = code.a[l];
        for (arma::uword r = 0; r < n_r; ++r)
            for (arma::uword row = 0; row < t; ++row)
            {
                double acc = 0.0;
                for (arma::uword col = 0; col < code.n_t; ++col)
                    if (auto v = a(row, col))
                        acc += double(v) * h_g(col, r);
                eq.matrix(r * t + row, l) = acc;
            }
    }
    eq.gain = arma::accu(arma::square(h_g));
    return eq;
}

}
