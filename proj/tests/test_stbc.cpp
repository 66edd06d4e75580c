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

#include "ramimo/stbc.hpp"

using namespace ramimo;

namespace
{
    using cd = std::complex<double>;

    std::vector<cd> random_symbols(std::size_t n, std::mt19937_64 &rng)
    {
        std::normal_distribution<double> gauss(0.0, 1.0);
        std::vector<cd> s(n);
        for (cd &v : s)
            v = cd(gauss(rng), gauss(rng));
        return s;
    }

    bool matrix_equal(const arma::cx_mat &x, const arma::cx_mat &y, double tol)
    {
        return x.n_rows == y.n_rows && x.n_cols == y.n_cols &&
               arma::abs(x - y).max() <= tol;
    }
}

TEST_CASE("rate-one real designs keep rate one with small integer entries")
{
    for (arma::uword n : {arma::uword(2), arma::uword(4), arma::uword(8)})
    {
        const StbcCode code = hurwitz_radon_code(n);
        CHECK(code.t_slots == n);
        CHECK(code.l_symbols == n);
        REQUIRE(code.a.size() == n);
        CHECK(code.b.empty());
        for (const arma::imat &m : code.a)
        {
            REQUIRE(m.n_rows == n);
            REQUIRE(m.n_cols == n);
            CHECK(m.max() <= 1);
            CHECK(m.min() >= -1);
        }
    }
    CHECK_THROWS_AS(hurwitz_radon_code(3), std::invalid_argument);
    CHECK_THROWS_AS(hurwitz_radon_code(16), std::invalid_argument);
}

TEST_CASE("coefficient identities hold exactly in integer arithmetic")
{
    for (arma::uword n : {arma::uword(2), arma::uword(4), arma::uword(8)})
    {
        const StbcCode code = hurwitz_radon_code(n);
        const arma::imat eye = arma::eye<arma::imat>(n, n);
        for (arma::uword k = 0; k < n; ++k)
        {
            const arma::imat gram = code.a[k].t() * code.a[k];
            CHECK(arma::all(arma::vectorise(gram == eye)));
            for (arma::uword l = k + 1; l < n; ++l)
            {
                const arma::imat cross = code.a[k].t() * code.a[l] +
                                         code.a[l].t() * code.a[k];
                CHECK(arma::all(arma::vectorise(cross == 0)));
            }
        }
    }
}

TEST_CASE("quadratic form acts as a scaled identity on random real vectors")
{
    std::mt19937_64 rng(31);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (arma::uword n : {arma::uword(2), arma::uword(4), arma::uword(8)})
    {
        const StbcCode code = hurwitz_radon_code(n);
        for (int trial = 0; trial < 1000 / int(n); ++trial)
        {
            arma::vec v(n);
            for (double &x : v)
                x = gauss(rng);
            const double vv = arma::dot(v, v);
            for (arma::uword k = 0; k < n; ++k)
                for (arma::uword l = 0; l < n; ++l)
                {
                    const arma::mat prod = arma::conv_to<arma::mat>::from(
                        code.a[k].t() * code.a[l]);
                    const double q = arma::dot(v, prod * v);
                    const double expect = (k == l) ? vv : 0.0;
                    CHECK(std::abs(q - expect) <= 1e-12 * std::max(1.0, vv));
                }
        }
    }
}

TEST_CASE("the 2-antenna codeword matches the classical layout")
{
    const StbcCode code = hurwitz_radon_code(2);
    std::mt19937_64 rng(7);
    const std::vector<cd> s = random_symbols(2, rng);

    arma::cx_mat expected(2, 2);
    expected(0, 0) = s[0];
    expected(0, 1) = s[1];
    expected(1, 0) = -s[1];
    expected(1, 1) = s[0];
    CHECK(matrix_equal(encode(code, s), expected, 0.0));

    CHECK(arma::abs(arma::conv_to<arma::mat>::from(code.a[0]) - arma::eye(2, 2)).max() ==
          0.0);
    arma::mat a2 = {{0.0, 1.0}, {-1.0, 0.0}};
    CHECK(arma::abs(arma::conv_to<arma::mat>::from(code.a[1]) - a2).max() == 0.0);
}

TEST_CASE("the 4-antenna codeword matches the classical layout")
{
    const StbcCode code = hurwitz_radon_code(4);
    std::mt19937_64 rng(8);
    const std::vector<cd> s = random_symbols(4, rng);

    arma::cx_mat expected(4, 4);
    expected.row(0) = arma::cx_rowvec{s[0], s[1], s[2], s[3]};
    expected.row(1) = arma::cx_rowvec{-s[1], s[0], -s[3], s[2]};
    expected.row(2) = arma::cx_rowvec{-s[2], s[3], s[0], -s[1]};
    expected.row(3) = arma::cx_rowvec{-s[3], -s[2], s[1], s[0]};
    CHECK(matrix_equal(encode(code, s), expected, 0.0));
}

TEST_CASE("encoding is linear and maps unit vectors to coefficients")
{
    std::mt19937_64 rng(9);
    for (arma::uword n : {arma::uword(2), arma::uword(4), arma::uword(8)})
    {
        const StbcCode code = hurwitz_radon_code(n);

        for (arma::uword l = 0; l < n; ++l)
        {
            std::vector<cd> unit(n, cd(0.0, 0.0));
            unit[l] = 1.0;
            const arma::cx_mat x = encode(code, unit);
            CHECK(arma::abs(x - arma::conv_to<arma::mat>::from(code.a[l])).max() == 0.0);
        }

        const std::vector<cd> s = random_symbols(n, rng);
        const std::vector<cd> u = random_symbols(n, rng);
        const cd alpha(0.7, -0.2), beta(-1.3, 0.4);
        std::vector<cd> mix(n);
        for (arma::uword i = 0; i < n; ++i)
            mix[i] = alpha * s[i] + beta * u[i];
        const arma::cx_mat lhs = encode(code, mix);
        const arma::cx_mat rhs = alpha * encode(code, s) + beta * encode(code, u);
        CHECK(matrix_equal(lhs, rhs, 1e-12));
    }
}

TEST_CASE("encode rejects a symbol count mismatch")
{
    const StbcCode code = hurwitz_radon_code(4);
    const std::vector<cd> s(3, cd(1.0, 0.0));
    CHECK_THROWS_AS(encode(code, s), std::invalid_argument);
}

TEST_CASE("the 2x2 complex orthogonal code conjugates its second slot")
{
    const StbcCode code = alamouti_code();

    const std::vector<cd> unit = {cd(1.0, 0.0), cd(0.0, 0.0)};
    CHECK(matrix_equal(encode(code, unit), arma::eye<arma::cx_mat>(2, 2), 0.0));

    const std::vector<cd> s = {cd(0.0, 1.0), cd(1.0, 0.0)};
    arma::cx_mat expected(2, 2);
    expected(0, 0) = cd(0.0, 1.0);
    expected(0, 1) = cd(1.0, 0.0);
    expected(1, 0) = cd(-1.0, 0.0);
    expected(1, 1) = cd(0.0, -1.0);
    CHECK(matrix_equal(encode(code, s), expected, 0.0));

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial)
    {
        const std::vector<cd> r = random_symbols(2, rng);
        const arma::cx_mat x = encode(code, r);
        const double e = std::norm(r[0]) + std::norm(r[1]);
        const arma::cx_mat gram = x.t() * x;
        CHECK(arma::abs(gram - e * arma::eye<arma::cx_mat>(2, 2)).max() < 1e-12);
    }
}

TEST_CASE("the quasi-orthogonal code stacks two 2x2 blocks")
{
    const StbcCode code = qostbc_code();
    CHECK(code.n_t == 4);
    CHECK(code.t_slots == 4);
    CHECK(code.l_symbols == 4);

    std::vector<cd> unit(4, cd(0.0, 0.0));
    unit[0] = 1.0;
    CHECK(matrix_equal(encode(code, unit), arma::eye<arma::cx_mat>(4, 4), 0.0));

    std::mt19937_64 rng(13);
    const std::vector<cd> s = random_symbols(4, rng);
    const StbcCode ala = alamouti_code();
    const arma::cx_mat blk_a = encode(ala, std::vector<cd>{s[0], s[1]});
    const arma::cx_mat blk_b = encode(ala, std::vector<cd>{s[2], s[3]});

    arma::cx_mat expected(4, 4);
    expected.submat(0, 0, 1, 1) = blk_a;
    expected.submat(0, 2, 1, 3) = blk_b;
    expected.submat(2, 0, 3, 1) = blk_b;
    expected.submat(2, 2, 3, 3) = blk_a;
    CHECK(matrix_equal(encode(code, s), expected, 0.0));
}

TEST_CASE("matched filtering couples only the diagonal symbol pairs")
{
    // Probe the widely-linear map s -> vec(X(s) h) with unit basis vectors to build its
    // real representation, then inspect the Gram matrix: entries should vanish unless
    // the two symbols are equal or form one of the pairs (s1,s3), (s2,s4).
    const StbcCode code = qostbc_code();
    std::mt19937_64 rng(17);
    std::normal_distribution<double> gauss(0.0, 1.0);

    arma::cx_mat h(4, 2);
    for (auto &v : h)
        v = cd(gauss(rng), gauss(rng));

    const arma::uword rows = 4 * 2;
    arma::mat m(2 * rows, 8);
    for (arma::uword l = 0; l < 4; ++l)
        for (int part = 0; part < 2; ++part)
        {
            std::vector<cd> s(4, cd(0.0, 0.0));
            s[l] = part == 0 ? cd(1.0, 0.0) : cd(0.0, 1.0);
            const arma::cx_vec y = arma::vectorise(encode(code, s) * h);
            m.col(2 * l + part) =
                arma::join_cols(arma::vec(arma::real(y)), arma::vec(arma::imag(y)));
        }

    const arma::mat gram = m.t() * m;
    auto coupled = [](arma::uword a, arma::uword b) {
        return a == b || (a == 0 && b == 2) || (a == 2 && b == 0) ||
               (a == 1 && b == 3) || (a == 3 && b == 1);
    };
    for (arma::uword i = 0; i < 8; ++i)
        for (arma::uword j = 0; j < 8; ++j)
        {
            const double v = std::abs(gram(i, j));
            if (!coupled(i / 2, j / 2))
                CHECK(v < 1e-12);
        }
}
