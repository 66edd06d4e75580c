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

#include "ramimo/stbc.hpp"

#include <stdexcept>
#include <utility>

namespace ramimo
{

namespace
{
    // Basis product e_i * e_j = sign * e_k of the Cayley-Dickson algebra of dimension
    // dim (1 = reals, 2 = complex, 4 = quaternions, 8 = octonions), built from the
    // doubling formula (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)).
    struct BasisProduct
    {
        int sign;
        arma::uword index;
    };

    std::vector<std::vector<BasisProduct>> cayley_dickson_table(arma::uword dim)
    {
        std::vector<std::vector<BasisProduct>> t(dim, std::vector<BasisProduct>(dim));
        if (dim == 1)
        {
            t[0][0] = {1, 0};
            return t;
        }

        const arma::uword n = dim / 2;
        auto sub = cayley_dickson_table(n);
        auto conj_sign = [](arma::uword i) { return i == 0 ? 1 : -1; };

        for (arma::uword i = 0; i < dim; ++i)
            for (arma::uword j = 0; j < dim; ++j)
            {
                if (i < n && j < n)
                {
                    t[i][j] = sub[i][j];
                }
                else if (i < n && j >= n)
                {
                    BasisProduct p = sub[j - n][i]; // (a,0)(0,d) = (0, d a)
                    t[i][j] = {p.sign, p.index + n};
                }
                else if (i >= n && j < n)
                {
                    BasisProduct p = sub[i - n][j]; // (0,b)(c,0) = (0, b conj(c))
                    t[i][j] = {conj_sign(j) * p.sign, p.index + n};
                }
                else
                {
                    BasisProduct p = sub[j - n][i - n]; // (0,b)(0,d) = (-conj(d) b, 0)
                    t[i][j] = {-conj_sign(j - n) * p.sign, p.index};
                }
            }
        return t;
    }
}

StbcCode hurwitz_radon_code(arma::uword n_t)
{
    if (n_t != 2 && n_t != 4 && n_t != 8)
        throw std::invalid_argument("stbc: rate-one real designs exist for 2, 4 or 8 antennas");

    auto table = cayley_dickson_table(n_t);

    StbcCode code;
    code.kind = CodeKind::hurwitz_radon;
    code.n_t = n_t;
    code.t_slots = n_t;
    code.l_symbols = n_t;
    code.a.resize(n_t);

    // Codeword row r carries the coefficients of e_r * (sum_l s_l e_l), so the
    // coefficient matrix of symbol l is a[l](r, k) = sign where e_r e_l = sign * e_k.
    for (arma::uword l = 0; l < n_t; ++l)
    {
        arma::imat m(n_t, n_t, arma::fill::zeros);
        for (arma::uword r = 0; r < n_t; ++r)
        {
            const BasisProduct &p = table[r][l];
            m(r, p.index) = p.sign;
        }
        code.a[l] = std::move(m);
    }
    return code;
}

StbcCode alamouti_code()
{
    StbcCode code;
    code.kind = CodeKind::alamouti;
    code.n_t = 2;
    code.t_slots = 2;
    code.l_symbols = 2;
    code.a.resize(2);
    code.b.resize(2);

    // Row 1: ( s1,        s2       )
    // Row 2: (-conj(s2),  conj(s1) )
    code.a[0] = arma::imat{{1, 0}, {0, 0}};
    code.a[1] = arma::imat{{0, 1}, {0, 0}};
    code.b[0] = arma::imat{{0, 0}, {0, 1}};
    code.b[1] = arma::imat{{0, 0}, {-1, 0}};
    return code;
}

StbcCode qostbc_code()
{
    StbcCode code;
    code.kind = CodeKind::qostbc;
    code.n_t = 4;
    code.t_slots = 4;
    code.l_symbols = 4;
    code.a.assign(4, arma::imat(4, 4, arma::fill::zeros));
    code.b.assign(4, arma::imat(4, 4, arma::fill::zeros));

    // ABBA layout from 2x2 orthogonal blocks A(s1,s2) and B(s3,s4):
    // Row 1: ( s1,        s2,        s3,        s4       )
    // Row 2: (-conj(s2),  conj(s1), -conj(s4),  conj(s3) )
    // Row 3: ( s3,        s4,        s1,        s2       )
    // Row 4: (-conj(s4),  conj(s3), -conj(s2),  conj(s1) )
    code.a[0](0, 0) = 1;
    code.a[1](0, 1) = 1;
    code.a[2](0, 2) = 1;
    code.a[3](0, 3) = 1;

    code.b[1](1, 0) = -1;
    code.b[0](1, 1) = 1;
    code.b[3](1, 2) = -1;
    code.b[2](1, 3) = 1;

    code.a[2](2, 0) = 1;
    code.a[3](2, 1) = 1;
    code.a[0](2, 2) = 1;
    code.a[1](2, 3) = 1;

    code.b[3](3, 0) = -1;
    code.b[2](3, 1) = 1;
    code.b[1](3, 2) = -1;
    code.b[0](3, 3) = 1;
    return code;
}

arma::cx_mat encode(const StbcCode &code, std::span<const std::complex<double>> s)
{
    if (s.size() != code.l_symbols)
        throw std::invalid_argument("stbc: symbol count does not match the code");

    arma::cx_mat x(code.t_slots, code.n_t, arma::fill::zeros);
    for (arma::uword l = 0; l < code.l_symbols; ++l)
    {
        const arma::imat &a = code.a[l];
        for (arma::uword col = 0; col < code.n_t; ++col)
            for (arma::uword row = 0; row < code.t_slots; ++row)
                if (auto v = a(row, col))
                    x(row, col) += double(v) * s[l];

        if (!code.b.empty())
        {
            const std::complex<double> sc = std::conj(s[l]);
            const arma::imat &b = code.b[l];
            for (arma::uword col = 0; col < code.n_t; ++col)
                for (arma::uword row = 0; row < code.t_slots; ++row)
                    if (auto v = b(row, col))
                        x(row, col) += double(v) * sc;
        }
    }
    return x;
}

}
