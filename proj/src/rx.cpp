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

#include "ramimo/rx.hpp"

#include <cmath>
#include <stdexcept>

namespace ramimo
{

namespace
{
    // Fills the result with the lowest-index point so undetectable frames still carry a
    // defined payload; callers count every bit of such frames as an error.
    DetectionResult undetectable(const Constellation &c, std::size_t n_symbols)
    {
        DetectionResult r;
        r.detectable = false;
        r.symbols.assign(n_symbols, c.points[0]);
        for (std::size_t l = 0; l < n_symbols; ++l)
            append_bits(c, 0, r.bits);
        return r;
    }
}

DetectionResult zf_detect(const EquivalentChannel &eq, const arma::cx_vec &y,
                          const Constellation &c)
{
    if (y.n_elem != eq.matrix.n_rows)
        throw std::invalid_argument("rx: received vector does not match the equivalent "
                                    "channel");

    const arma::uword l_symbols = eq.matrix.n_cols;
    if (eq.gain <= 0.0)
        return undetectable(c, l_symbols);

    // s_hat = M^T y / gain, evaluated on the real and imaginary parts separately since
    // the equivalent channel is real.
    arma::vec soft_re = eq.matrix.t() * arma::real(y);
    arma::vec soft_im = eq.matrix.t() * arma::imag(y);

    DetectionResult r;
    r.symbols.resize(l_symbols);
    r.bits.reserve(l_symbols * c.bits_per_symbol);
    for (arma::uword l = 0; l < l_symbols; ++l)
    {
        std::complex<double> soft(soft_re(l) / eq.gain, soft_im(l) / eq.gain);
        std::size_t idx = demap_nearest(c, soft);
        r.symbols[l] = c.points[idx];
        append_bits(c, idx, r.bits);
        r.metric += eq.gain * std::norm(soft - c.points[idx]);
    }
    return r;
}

DetectionResult ml_detect_exhaustive(const StbcCode &code, const arma::cx_mat &h_eff,
                                     const arma::cx_mat &y,
                                     const std::vector<const Constellation *> &cs)
{
    const arma::uword t = code.t_slots;
    const arma::uword l_symbols = code.l_symbols;
    if (h_eff.n_rows != code.n_t || h_eff.n_cols == 0)
        throw std::invalid_argument("rx: channel shape does not match the code");
    if (y.n_rows != t || y.n_cols != h_eff.n_cols)
        throw std::invalid_argument("rx: received block shape mismatch");
    if (cs.size() != l_symbols)
        throw std::invalid_argument("rx: one constellation per symbol required");

    std::size_t candidates = 1;
    for (const Constellation *c : cs)
    {
        if (c == nullptr)
            throw std::invalid_argument("rx: null constellation");
        candidates *= c->size();
        if (candidates > (std::size_t(1) << 20))
            throw std::invalid_argument("rx: exhaustive search space exceeds 2^20");
    }

    // Real-valued model: with x = [Re s; Im s], the stacked receive vector satisfies
    // [Re y; Im y] = M x + noise, where symbol l contributes vec(a[l] h) and, for codes
    // with conjugate branches, vec(b[l] h). The ML metric becomes
    // x^T G x - 2 m^T x + ||y||^2 with G = M^T M.
    const arma::uword n_r = h_eff.n_cols;
    const arma::uword rows = t * n_r;
    arma::mat m_model(2 * rows, 2 * l_symbols);
    arma::cx_mat c_l(t, n_r), d_l(t, n_r);
    for (arma::uword l = 0; l < l_symbols; ++l)
    {
        c_l = arma::conv_to<arma::cx_mat>::from(code.a[l]) * h_eff;
        if (code.b.empty())
            d_l.zeros(t, n_r);
        else
            d_l = arma::conv_to<arma::cx_mat>::from(code.b[l]) * h_eff;

        arma::cx_vec sum = arma::vectorise(c_l + d_l);  // coefficient of Re(s_l)
        arma::cx_vec diff = arma::vectorise(c_l - d_l); // j * diff multiplies Im(s_l)
        arma::vec re_sum = arma::real(sum), im_sum = arma::imag(sum);
        arma::vec re_diff = arma::real(diff), im_diff = arma::imag(diff);
        m_model.col(l) = arma::join_cols(re_sum, im_sum);
        m_model.col(l_symbols + l) = arma::join_cols(-im_diff, re_diff);
    }

    arma::vec y_stacked =
        arma::join_cols(arma::vec(arma::real(arma::vectorise(y))),
                        arma::vec(arma::imag(arma::vectorise(y))));
    arma::mat gram = m_model.t() * m_model;
    arma::vec m_vec = m_model.t() * y_stacked;
    const double y_energy = arma::dot(y_stacked, y_stacked);

    const arma::uword dim = 2 * l_symbols;
    std::vector<std::size_t> digit(l_symbols, 0);
    arma::vec x(dim);

    double best_metric = 0.0;
    std::vector<std::size_t> best(l_symbols, 0);
    bool first = true;

    for (;;)
    {
        for (arma::uword l = 0; l < l_symbols; ++l)
        {
            const std::complex<double> p = cs[l]->points[digit[l]];
            x(l) = p.real();
            x(l_symbols + l) = p.imag();
        }

        double quad = 0.0, lin = 0.0;
        for (arma::uword i = 0; i < dim; ++i)
        {
            double acc = 0.0;
            for (arma::uword j = 0; j < dim; ++j)
                acc += gram(i, j) * x(j);
            quad += x(i) * acc;
            lin += m_vec(i) * x(i);
        }
        double metric = quad - 2.0 * lin + y_energy;

        if (first || metric < best_metric)
        {
            first = false;
            best_metric = metric;
            best = digit;
        }

        // Odometer, symbol 0 fastest; first-seen minimum implements the
        // lowest-index tie-break per symbol.
        arma::uword l = 0;
        while (l < l_symbols && ++digit[l] == cs[l]->size())
            digit[l++] = 0;
        if (l == l_symbols)
            break;
    }

    DetectionResult r;
    r.metric = best_metric;
    r.symbols.resize(l_symbols);
    for (arma::uword l = 0; l < l_symbols; ++l)
    {
        r.symbols[l] = cs[l]->points[best[l]];
        append_bits(*cs[l], best[l], r.bits);
    }
    return r;
}

DetectionResult alamouti_detect(const arma::cx_mat &h_eff, const arma::cx_mat &y,
                                const Constellation &c)
{
    if (h_eff.n_rows != 2 || h_eff.n_cols == 0)
        throw std::invalid_argument("rx: alamouti needs a 2 x n_r channel");
    if (y.n_rows != 2 || y.n_cols != h_eff.n_cols)
        throw std::invalid_argument("rx: received block shape mismatch");

    // Conjugate-stacked matched filter; the code's orthogonality makes this exact ML
    // with per-symbol slicing.
    std::complex<double> m1 = 0.0, m2 = 0.0;
    double gain = 0.0;
    for (arma::uword r = 0; r < h_eff.n_cols; ++r)
    {
        const std::complex<double> h1 = h_eff(0, r), h2 = h_eff(1, r);
        const std::complex<double> y1 = y(0, r), y2c = std::conj(y(1, r));
        m1 += std::conj(h1) * y1 + h2 * y2c;
        m2 += std::conj(h2) * y1 - h1 * y2c;
        gain += std::norm(h1) + std::norm(h2);
    }

    if (gain <= 0.0)
        return undetectable(c, 2);

    DetectionResult r;
    r.symbols.resize(2);
    const std::complex<double> soft[2] = {m1 / gain, m2 / gain};
    for (int l = 0; l < 2; ++l)
    {
        std::size_t idx = demap_nearest(c, soft[l]);
        r.symbols[l] = c.points[idx];
        append_bits(c, idx, r.bits);
        r.metric += gain * std::norm(soft[l] - c.points[idx]);
    }
    return r;
}

DetectionResult qostbc_detect(const arma::cx_mat &h_eff, const arma::cx_mat &y,
                              const Constellation &c_a, const Constellation &c_b)
{
    if (h_eff.n_rows != 4 || h_eff.n_cols == 0)
        throw std::invalid_argument("rx: quasi-orthogonal decoder needs a 4 x n_r channel");
    if (y.n_rows != 4 || y.n_cols != h_eff.n_cols)
        throw std::invalid_argument("rx: received block shape mismatch");

    // Conjugate-stacked model: per receive antenna, (y1, y2*, y3, y4*) = Hc s + noise.
    // The Gram of Hc is alpha * I plus a real coupling beta between symbol pairs (1,3)
    // and (2,4) only, so joint search over each pair is exact ML.
    std::complex<double> m[4] = {0.0, 0.0, 0.0, 0.0};
    double alpha = 0.0, beta = 0.0;
    for (arma::uword r = 0; r < h_eff.n_cols; ++r)
    {
        const std::complex<double> h1 = h_eff(0, r), h2 = h_eff(1, r);
        const std::complex<double> h3 = h_eff(2, r), h4 = h_eff(3, r);
        const std::complex<double> y1 = y(0, r), y2c = std::conj(y(1, r));
        const std::complex<double> y3 = y(2, r), y4c = std::conj(y(3, r));

        m[0] += std::conj(h1) * y1 + h2 * y2c + std::conj(h3) * y3 + h4 * y4c;
        m[1] += std::conj(h2) * y1 - h1 * y2c + std::conj(h4) * y3 - h3 * y4c;
        m[2] += std::conj(h3) * y1 + h4 * y2c + std::conj(h1) * y3 + h2 * y4c;
        m[3] += std::conj(h4) * y1 - h3 * y2c + std::conj(h2) * y3 - h1 * y4c;

        alpha += std::norm(h1) + std::norm(h2) + std::norm(h3) + std::norm(h4);
        beta += 2.0 * (std::real(std::conj(h1) * h3) + std::real(h2 * std::conj(h4)));
    }

    if (alpha <= 0.0)
        return undetectable(c_a, 4);

    // J(u, v) = alpha (|u|^2 + |v|^2) + 2 beta Re(u* v) - 2 Re(u* m_u) - 2 Re(v* m_v),
    // minimized jointly; ties break toward the lowest point indices.
    auto search_pair = [&](const std::complex<double> &m_u, const std::complex<double> &m_v,
                           std::size_t &best_u, std::size_t &best_v) {
        double best = 0.0;
        bool first = true;
        for (std::size_t j = 0; j < c_b.size(); ++j)
        {
            const std::complex<double> v = c_b.points[j];
            const double v_part = alpha * std::norm(v) - 2.0 * std::real(std::conj(v) * m_v);
            for (std::size_t i = 0; i < c_a.size(); ++i)
            {
                const std::complex<double> u = c_a.points[i];
                double metric = alpha * std::norm(u) + v_part +
                                2.0 * beta * std::real(std::conj(u) * v) -
                                2.0 * std::real(std::conj(u) * m_u);
                if (first || metric < best)
                {
                    first = false;
                    best = metric;
                    best_u = i;
                    best_v = j;
                }
            }
        }
        return best;
    };

    std::size_t i1 = 0, i3 = 0, i2 = 0, i4 = 0;
    double j13 = search_pair(m[0], m[2], i1, i3);
    double j24 = search_pair(m[1], m[3], i2, i4);

    DetectionResult r;
    r.metric = j13 + j24;
    r.symbols = {c_a.points[i1], c_a.points[i2], c_b.points[i3], c_b.points[i4]};
    append_bits(c_a, i1, r.bits);
    append_bits(c_a, i2, r.bits);
    append_bits(c_b, i3, r.bits);
    append_bits(c_b, i4, r.bits);
    return r;
}

DetectionResult lens_zf_detect(const arma::cx_mat &h_eff, const arma::cx_vec &y,
                               const Constellation &c, double rank_tol)
{
    if (h_eff.n_elem == 0)
        throw std::invalid_argument("rx: empty channel");
    if (y.n_elem != h_eff.n_cols)
        throw std::invalid_argument("rx: received vector does not match the antenna count");

    const arma::uword n_t = h_eff.n_rows;

    // One stream per transmit antenna through y = h^T x + z; ZF needs the full column
    // rank of h^T, checked against the SVD spectrum.
    arma::cx_mat a = h_eff.st();
    arma::cx_mat u, v;
    arma::vec sv;
    if (!arma::svd(u, sv, v, a))
        return undetectable(c, n_t);
    if (sv.n_elem < n_t || sv(0) <= 0.0 || sv(n_t - 1) <= rank_tol * sv(0))
        return undetectable(c, n_t);

    arma::cx_vec proj = u.head_cols(sv.n_elem).t() * y;
    for (arma::uword i = 0; i < proj.n_elem; ++i)
        proj(i) /= sv(i);
    arma::cx_vec soft = v * proj;

    DetectionResult r;
    r.symbols.resize(n_t);
    r.bits.reserve(n_t * c.bits_per_symbol);
    for (arma::uword l = 0; l < n_t; ++l)
    {
        std::size_t idx = demap_nearest(c, soft(l));
        r.symbols[l] = c.points[idx];
        append_bits(c, idx, r.bits);
        r.metric += std::norm(soft(l) - c.points[idx]);
    }
    return r;
}

}
