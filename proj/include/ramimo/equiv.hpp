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

#ifndef RAMIMO_EQUIV_HPP
#define RAMIMO_EQUIV_HPP

#include <armadillo>

#include "ramimo/stbc.hpp"

namespace ramimo
{
    // Real equivalent channel of a rate-one real design over a real channel h_g:
    // stacking the received slots of all n_r antennas into one vector y gives
    //   y = eq.matrix * s + noise,   eq.matrix column l = vec over antennas of a[l] * h_g(:,r)
    // For a design satisfying the orthogonality identities, matrix^T * matrix equals
    // ||h_g||_F^2 * I exactly, so symbol-by-symbol detection is lossless.
    struct EquivalentChannel
    {
        arma::mat matrix; // (t_slots * n_r) x l_symbols
        double gain = 0.0; // squared Frobenius norm of h_g
    };

    // Throws std::invalid_argument if the code is not a rate-one real design or if
    // h_g is not n_t x n_r.
    EquivalentChannel build_equivalent_channel(const StbcCode &code, const arma::mat &h_g);
}

#endif
