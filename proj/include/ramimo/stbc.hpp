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

#ifndef RAMIMO_STBC_HPP
#define RAMIMO_STBC_HPP

#include <armadillo>
#include <complex>
#include <span>
#include <vector>

namespace ramimo
{
    enum class CodeKind
    {
        hurwitz_radon, // rate-one real orthogonal design, n_t in {2, 4, 8}
        alamouti,      // 2x2 complex orthogonal design
        qostbc         // 4x4 quasi-orthogonal design (ABBA layout)
    };

    // Linear space-time block code in dispersion form:
    //   X(s) = sum_l  a[l] * s_l  +  b[l] * conj(s_l)
    // with integer coefficient matrices of size t_slots x n_t and entries in {-1, 0, 1}.
    // Codes without conjugate branches leave b empty.
    struct StbcCode
    {
        CodeKind kind = CodeKind::hurwitz_radon;
        arma::uword n_t = 2;      // transmit antennas (columns of X)
        arma::uword t_slots = 2;  // time slots (rows of X)
        arma::uword l_symbols = 2; // symbols per codeword; rate one means l == t
        std::vector<arma::imat> a;
        std::vector<arma::imat> b;
    };

    // Rate-one real orthogonal design whose coefficient matrices satisfy, exactly in
    // integer arithmetic, a[k]^T a[k] = I and a[k]^T a[l] = -a[l]^T a[k] for k != l.
    // Generated from the Cayley-Dickson multiplication table of dimension n_t, which
    // reproduces the classical 2x2 and 4x4 designs and extends them to 8x8.
    // Throws std::invalid_argument unless n_t is 2, 4 or 8.
    StbcCode hurwitz_radon_code(arma::uword n_t);

    // 2x2 complex orthogonal design: rows (s1, s2) and (-conj(s2), conj(s1)).
    StbcCode alamouti_code();

    // 4x4 quasi-orthogonal design in ABBA form built from two stacked 2x2 blocks:
    //   [ A(s1,s2)  B(s3,s4) ]
    //   [ B(s3,s4)  A(s1,s2) ]
    // Symbol pairs (s1,s3) and (s2,s4) stay coupled after matched filtering; the caller
    // restores diversity by drawing s3, s4 from a rotated constellation.
    StbcCode qostbc_code();

    // Codeword for one symbol vector; s.size() must equal l_symbols.
    arma::cx_mat encode(const StbcCode &code, std::span<const std::complex<double>> s);
}

#endif
