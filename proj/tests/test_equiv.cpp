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

#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>
#include <vector>

#include "ramimo/channel.hpp"
#include "ramimo/equiv.hpp"
#include "ramimo/reconfig.hpp"
#include "ramimo/stbc.hpp"

using namespace ramimo;

namespace
{
    using cd = std::complex<double>;

    arma::mat random_egc_channel(arma::uword n_t, arma::uword n_r, std::mt19937_64 &rng)
    {
        RicianParams p;
        p.n_t = n_t;
        p.n_r = n_r;
        const arma::cx_mat h = sample_rician(p, rng);
        return to_real_channel(reconfigure(h, egc_weights(h)), 1e-9);
    }
}

TEST_CASE("the single-receiver 2-antenna stack matches the closed form")
{
    const StbcCode code = hurwitz_radon_code(2);
    arma::mat h_g(2, 1);
    h_g(0, 0) = 0.8;
    h_g(1, 0) = 1.7;
    const EquivalentChannel eq = build_equivalent_channel(code, h_g);

    arma::mat expected = {{0.8, 1.7}, {1.7, -0.8}};
    REQUIRE(eq.matrix.n_rows == 2);
    REQUIRE(eq.matrix.n_cols == 2);
    CHECK(arma::abs(eq.matrix - expected).max() == 0.0);
    CHECK(eq.gain == Catch::Approx(0.8 * 0.8 + 1.7 * 1.7).margin(1e-15));
}

TEST_CASE("the single-receiver 4-antenna stack matches the closed form")
{
    const StbcCode code = hurwitz_radon_code(4);
    arma::mat h_g(4, 1);
    h_g(0, 0) = 0.3;
    h_g(1, 0) = 1.1;
    h_g(2, 0) = 0.6;
    h_g(3, 0) = 2.0;
    const EquivalentChannel eq = build_equivalent_channel(code, h_g);

    REQUIRE(eq.matrix.n_rows == 4);
    REQUIRE(eq.matrix.n_cols == 4);
    arma::rowvec row2 = {1.1, -0.3, 2.0, -0.6};
    CHECK(arma::abs(eq.matrix.row(1) - row2).max() == 0.0);
    arma::rowvec row1 = {0.3, 1.1, 0.6, 2.0};
    CHECK(arma::abs(eq.matrix.row(0) - row1).max() == 0.0);
}

TEST_CASE("the stacked model reproduces the slot-by-slot codeword product")
{
    std::mt19937_64 rng(41);
    std::normal_distribution<double> gauss(0.0, 1.0);

    for (arma::uword n_t : {arma::uword(2), arma::uword(4), arma::uword(8)})
        for (arma::uword n_r : {arma::uword(1), arma::uword(2), arma::uword(4)})
        {
            const StbcCode code = hurwitz_radon_code(n_t);
            const arma::mat h_g = random_egc_channel(n_t, n_r, rng);
            const EquivalentChannel eq = build_equivalent_channel(code, h_g);

            for (int trial = 0; trial < 10; ++trial)
            {
                std::vector<cd> s(n_t);
                arma::cx_vec sv(n_t);
                for (arma::uword l = 0; l < n_t; ++l)
                {
                    s[l] = cd(gauss(rng), gauss(rng));
                    sv(l) = s[l];
                }
                const arma::cx_vec direct = arma::vectorise(encode(code, s) * h_g);
                const arma::cx_vec stacked = eq.matrix * sv;
                CHECK(arma::abs(direct - stacked).max() < 1e-12);
            }
        }
}

TEST_CASE("equivalent channels of equal-gain links are orthogonal")
{
    std::mt19937_64 rng(43);
    for (arma::uword n_t : {arma::uword(2), arma::uword(4)})
    {
        const StbcCode code = hurwitz_radon_code(n_t);
        double worst = 0.0;
        for (int trial = 0; trial < 1000; ++trial)
        {
            const arma::mat h_g = random_egc_channel(n_t, n_t, rng);
            const EquivalentChannel eq = build_equivalent_channel(code, h_g);
            const arma::mat gram = eq.matrix.t() * eq.matrix;
            const arma::mat dev =
                gram - eq.gain * arma::eye(code.l_symbols, code.l_symbols);
            worst = std::max(worst, arma::abs(dev).max() / eq.gain);
        }
        CHECK(worst <= 1e-10);
    }
}

TEST_CASE("the gain equals the squared channel norm")
{
    std::mt19937_64 rng(47);
    const StbcCode code = hurwitz_radon_code(4);
    const arma::mat h_g = random_egc_channel(4, 2, rng);
    const EquivalentChannel eq = build_equivalent_channel(code, h_g);
    CHECK(eq.gain == Catch::Approx(arma::accu(arma::square(h_g))).margin(1e-15));
}

TEST_CASE("only rate-one real designs are stackable")
{
    arma::mat h_g(2, 1, arma::fill::ones);
    CHECK_THROWS_AS(build_equivalent_channel(alamouti_code(), h_g),
                    std::invalid_argument);
}
