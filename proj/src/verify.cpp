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

#include "ramimo/verify.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "ramimo/channel.hpp"
#include "ramimo/equiv.hpp"
#include "ramimo/reconfig.hpp"
#include "ramimo/rx.hpp"
#include "ramimo/sim.hpp"
#include "ramimo/stbc.hpp"

namespace ramimo
{

SuiteResult verify_dispersion()
{
    SuiteResult r;
    r.name = "dispersion";
    r.passed = true;

    for (arma::uword n : {arma::uword(2), arma::uword(4), arma::uword(8)})
    {
        const StbcCode code = hurwitz_radon_code(n);
        const arma::imat eye = arma::eye<arma::imat>(n, n);
        for (arma::uword k = 0; k < n && r.passed; ++k)
        {
            if (arma::any(arma::vectorise(code.a[k].t() * code.a[k] != eye)))
                r.passed = false;
            if (arma::abs(code.a[k]).max() > 1)
                r.passed = false;
            for (arma::uword l = k + 1; l < n && r.passed; ++l)
            {
                arma::imat skew = code.a[k].t() * code.a[l] + code.a[l].t() * code.a[k];
                if (arma::any(arma::vectorise(skew != 0)))
                    r.passed = false;
            }
        }
    }
    r.detail = r.passed ? "integer identities exact for 2, 4 and 8 antennas"
                        : "integer identity violated";
    return r;
}

SuiteResult verify_orthogonality(std::uint64_t seed)
{
    SuiteResult r;
    r.name = "orthogonality";

    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (arma::uword n : {arma::uword(2), arma::uword(4)})
    {
        const StbcCode code = hurwitz_radon_code(n);
        const RicianParams params{n, n, 2.0, false};
        for (int trial = 0; trial < 1000; ++trial)
        {
            arma::mat h_g = arma::abs(sample_rician(params, rng));
            EquivalentChannel eq = build_equivalent_channel(code, h_g);
            arma::mat gram = eq.matrix.t() * eq.matrix;
            gram.diag() -= eq.gain;
            worst = std::max(worst, arma::abs(gram).max() / eq.gain);
        }
    }

    r.passed = worst <= 1e-10;
    std::ostringstream os;
    os << "max relative deviation from gain * I = " << worst << " over 2000 channels";
    r.detail = os.str();
    return r;
}

SuiteResult verify_equal_gain(std::uint64_t seed)
{
    SuiteResult r;
    r.name = "equal-gain";

    std::mt19937_64 rng(seed);
    double worst_im = 0.0, worst_mag = 0.0;
    for (arma::uword n : {arma::uword(2), arma::uword(4)})
    {
        const RicianParams params{n, n, 2.0, false};
        for (int trial = 0; trial < 5000; ++trial)
        {
            arma::cx_mat h = sample_rician(params, rng);
            ReconfigWeights w = egc_weights(h);
            arma::cx_mat h_g = reconfigure(h, w);
            worst_im = std::max(worst_im, arma::abs(arma::imag(h_g)).max());
            worst_mag =
                std::max(worst_mag, arma::abs(arma::real(h_g) - arma::abs(h)).max());
        }
    }

    r.passed = worst_im <= 1e-12 && worst_mag <= 1e-12;
    std::ostringstream os;
    os << "max imaginary residue = " << worst_im << ", max |deviation from |h|| = "
       << worst_mag << " over 10000 channels";
    r.detail = os.str();
    return r;
}

SuiteResult verify_zf_ml_equivalence(std::uint64_t seed, std::size_t frames)
{
    SuiteResult r;
    r.name = "zf-ml";

    const StbcCode code = hurwitz_radon_code(2);
    const Constellation con = build_constellation(ModScheme::qam16);
    const std::vector<const Constellation *> cs{&con, &con};
    const RicianParams params{2, 2, 2.0, false};
    const double snr_db = 10.0;
    const double noise_std = std::sqrt(0.5 * std::pow(10.0, -0.1 * snr_db));
    const double tx_scale = 1.0 / std::sqrt(2.0);

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::size_t mismatches = 0;

    for (std::size_t f = 0; f < frames; ++f)
    {
        arma::mat h_g = tx_scale * arma::abs(sample_rician(params, rng));
        EquivalentChannel eq = build_equivalent_channel(code, h_g);

        arma::vec s_re(2), s_im(2);
        std::vector<std::complex<double>> sym(2);
        for (int l = 0; l < 2; ++l)
        {
            sym[l] = con.points[rng() % con.size()];
            s_re(l) = sym[l].real();
            s_im(l) = sym[l].imag();
        }

        arma::vec y_re = eq.matrix * s_re;
        arma::vec y_im = eq.matrix * s_im;
        arma::cx_vec y(eq.matrix.n_rows);
        for (arma::uword i = 0; i < y.n_elem; ++i)
            y(i) = std::complex<double>(y_re(i) + noise_std * gauss(rng),
                                        y_im(i) + noise_std * gauss(rng));

        DetectionResult zf = zf_detect(eq, y, con);
        arma::cx_mat y_block = arma::reshape(arma::cx_vec(y), code.t_slots, h_g.n_cols);
        DetectionResult ml = ml_detect_exhaustive(
            code, arma::cx_mat(h_g, arma::mat(arma::size(h_g), arma::fill::zeros)), y_block,
            cs);

        if (zf.bits != ml.bits)
            ++mismatches;
    }

    r.passed = mismatches == 0;
    std::ostringstream os;
    os << mismatches << " decision mismatches in " << frames << " noisy frames";
    r.detail = os.str();
    return r;
}

std::vector<SuiteResult> verify_all()
{
    return {verify_dispersion(), verify_orthogonality(), verify_equal_gain(),
            verify_zf_ml_equivalence()};
}

std::vector<std::string> verify_suite_names()
{
    return {"dispersion", "orthogonality", "equal-gain", "zf-ml"};
}

SuiteResult verify_suite(const std::string &name)
{
    if (name == "dispersion")
        return verify_dispersion();
    if (name == "orthogonality")
        return verify_orthogonality();
    if (name == "equal-gain")
        return verify_equal_gain();
    if (name == "zf-ml")
        return verify_zf_ml_equivalence();
    throw std::invalid_argument("verify: unknown suite '" + name + "'");
}

}
