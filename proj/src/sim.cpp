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

#include "ramimo/sim.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>
#include <utility>

#include "ramimo/channel.hpp"
#include "ramimo/equiv.hpp"
#include "ramimo/rx.hpp"
#include "ramimo/stbc.hpp"

namespace ramimo
{

namespace
{
    struct CompiledScenario
    {
        Scenario sc;
        RicianParams rician;
        StbcCode code;          // block-code schemes only
        Constellation con;      // base alphabet
        Constellation con_rot;  // qostbc: alphabet of the second symbol pair
        unsigned bits_per_frame = 0;
        unsigned symbols_per_frame = 0;
        double tx_scale = 1.0;  // 1/sqrt(n_t), keeps transmit power per slot at one
    };

    struct FrameOutcome
    {
        std::int64_t bits = 0;
        std::int64_t errors = 0;
    };

    CompiledScenario compile(const Scenario &sc)
    {
        CompiledScenario cs;
        cs.sc = sc;
        cs.rician = {sc.n_t, sc.n_r, sc.k_factor_db, sc.pure_rayleigh};
        cs.con = build_constellation(sc.constellation, 0.0);
        cs.tx_scale = 1.0 / std::sqrt(double(sc.n_t));

        switch (sc.scheme)
        {
        case Scheme::proposed:
            cs.code = hurwitz_radon_code(sc.n_t);
            cs.symbols_per_frame = unsigned(cs.code.l_symbols);
            break;
        case Scheme::ostbc:
            cs.code = alamouti_code();
            cs.symbols_per_frame = 2;
            break;
        case Scheme::qostbc:
            cs.code = qostbc_code();
            cs.con_rot = build_constellation(sc.constellation, sc.rotation_rad);
            cs.symbols_per_frame = 4;
            break;
        case Scheme::lens:
            cs.symbols_per_frame = unsigned(sc.n_t);
            break;
        }
        cs.bits_per_frame = cs.symbols_per_frame * cs.con.bits_per_symbol;
        return cs;
    }

    // Draw order per frame is fixed: channel entries, then data bits, then noise.
    void draw_bits(std::mt19937_64 &rng, std::uint8_t *bits, unsigned n)
    {
        std::uint64_t word = 0;
        unsigned avail = 0;
        for (unsigned i = 0; i < n; ++i)
        {
            if (avail == 0)
            {
                word = rng();
                avail = 64;
            }
            bits[i] = std::uint8_t(word & 1u);
            word >>= 1;
            --avail;
        }
    }

    std::int64_t count_bit_errors(const std::uint8_t *tx, const std::vector<std::uint8_t> &rx,
                                  unsigned n)
    {
        std::int64_t e = 0;
        for (unsigned i = 0; i < n; ++i)
            e += (tx[i] != rx[i]);
        return e;
    }

    FrameOutcome simulate_frame(const CompiledScenario &cs, std::uint64_t frame_seed,
                                double noise_std)
    {
        std::mt19937_64 rng(frame_seed);
        std::normal_distribution<double> gauss(0.0, 1.0);

        const arma::uword n_r = cs.sc.n_r;
        arma::cx_mat h = sample_rician(cs.rician, rng);

        std::uint8_t tx_bits[64];
        draw_bits(rng, tx_bits, cs.bits_per_frame);

        const unsigned bps = cs.con.bits_per_symbol;
        std::vector<std::complex<double>> sym(cs.symbols_per_frame);
        for (unsigned l = 0; l < cs.symbols_per_frame; ++l)
        {
            const Constellation &c =
                (cs.sc.scheme == Scheme::qostbc && l >= 2) ? cs.con_rot : cs.con;
            std::uint32_t label = 0;
            for (unsigned k = 0; k < bps; ++k)
                label = (label << 1) | tx_bits[l * bps + k];
            sym[l] = c.points[c.point_of_label[label]];
        }

        DetectionResult det;

        if (cs.sc.scheme == Scheme::proposed)
        {
            // Equal-gain reconfiguration turns the link into |h|; the equivalent-channel
            // columns then carry the codeword responses directly, so the received stack
            // is M * s plus noise without forming the codeword.
            arma::mat h_g = cs.tx_scale * arma::abs(h);
            EquivalentChannel eq = build_equivalent_channel(cs.code, h_g);

            const arma::uword n = eq.matrix.n_rows;
            arma::vec s_re(cs.symbols_per_frame), s_im(cs.symbols_per_frame);
            for (unsigned l = 0; l < cs.symbols_per_frame; ++l)
            {
                s_re(l) = sym[l].real();
                s_im(l) = sym[l].imag();
            }
            arma::vec y_re = eq.matrix * s_re;
            arma::vec y_im = eq.matrix * s_im;
            arma::cx_vec y(n);
            for (arma::uword i = 0; i < n; ++i)
                y(i) = std::complex<double>(y_re(i) + noise_std * gauss(rng),
                                            y_im(i) + noise_std * gauss(rng));
            det = zf_detect(eq, y, cs.con);
        }
        else if (cs.sc.scheme == Scheme::lens)
        {
            arma::cx_mat h_eff = cs.tx_scale * h;
            arma::cx_vec y(n_r);
            for (arma::uword r = 0; r < n_r; ++r)
            {
                std::complex<double> acc = 0.0;
                for (arma::uword t = 0; t < cs.sc.n_t; ++t)
                    acc += h_eff(t, r) * sym[t];
                double re = noise_std * gauss(rng);
                double im = noise_std * gauss(rng);
                y(r) = acc + std::complex<double>(re, im);
            }
            det = lens_zf_detect(h_eff, y, cs.con);
        }
        else
        {
            arma::cx_mat h_eff = cs.tx_scale * h;
            arma::cx_mat x = encode(cs.code, sym);
            arma::cx_mat y = x * h_eff;
            for (arma::uword i = 0; i < y.n_elem; ++i) // column-major, like the channel
            {
                double re = noise_std * gauss(rng);
                double im = noise_std * gauss(rng);
                y(i) += std::complex<double>(re, im);
            }
            det = (cs.sc.scheme == Scheme::ostbc)
                      ? alamouti_detect(h_eff, y, cs.con)
                      : qostbc_detect(h_eff, y, cs.con, cs.con_rot);
        }

        FrameOutcome out;
        out.bits = cs.bits_per_frame;
        out.errors = det.detectable ? count_bit_errors(tx_bits, det.bits, cs.bits_per_frame)
                                    : cs.bits_per_frame;
        return out;
    }

    // Batch sizes depend only on the number of frames already done, never on the worker
    // count, so the stop rule fires after the same frame totals everywhere.
    std::int64_t batch_size(std::int64_t done)
    {
        std::int64_t b = 1024;
        while (b < 32768 && b <= done)
            b *= 2;
        return b;
    }
}

void validate(const Scenario &sc)
{
    if (sc.name.empty())
        throw std::invalid_argument("sim: scenario name must not be empty");
    if (sc.snr_grid_db.empty())
        throw std::invalid_argument("sim: SNR grid must not be empty");
    for (double v : sc.snr_grid_db)
        if (!std::isfinite(v))
            throw std::invalid_argument("sim: SNR grid must be finite");
    if (sc.n_r == 0)
        throw std::invalid_argument("sim: at least one receive antenna required");
    if (sc.stop.min_bit_errors < 1 || sc.stop.max_frames < 1)
        throw std::invalid_argument("sim: stop rule thresholds must be positive");
    if (!sc.pure_rayleigh && !std::isfinite(sc.k_factor_db))
        throw std::invalid_argument("sim: K-factor must be finite");

    switch (sc.scheme)
    {
    case Scheme::proposed:
        if (sc.n_t != 2 && sc.n_t != 4 && sc.n_t != 8)
            throw std::invalid_argument("sim: rate-one real designs need 2, 4 or 8 antennas");
        break;
    case Scheme::ostbc:
        if (sc.n_t != 2)
            throw std::invalid_argument("sim: the orthogonal baseline is a 2-antenna code");
        break;
    case Scheme::qostbc:
        if (sc.n_t != 4)
            throw std::invalid_argument("sim: the quasi-orthogonal baseline is a 4-antenna "
                                        "code");
        break;
    case Scheme::lens:
        if (sc.n_t == 0)
            throw std::invalid_argument("sim: at least one transmit antenna required");
        break;
    }

    if (sc.scheme != Scheme::qostbc && sc.rotation_rad != 0.0)
        throw std::invalid_argument("sim: constellation rotation only applies to the "
                                    "quasi-orthogonal scheme");
}

unsigned bits_per_channel_use(const Scenario &sc)
{
    unsigned bps = bits_per_symbol(sc.constellation);
    // Block codes here are rate one (symbols == slots); spatial multiplexing sends
    // n_t symbols per slot.
    return sc.scheme == Scheme::lens ? unsigned(sc.n_t) * bps : bps;
}

std::uint64_t derive_frame_seed(std::uint64_t master, std::uint64_t snr_index,
                                std::uint64_t frame_index)
{
    // splitmix64 output at stream position (snr_index, frame_index); the finalizer is
    // bijective, so distinct counters never collide for a fixed master seed.
    std::uint64_t counter = (snr_index << 40) + frame_index + 1;
    std::uint64_t z = master + counter * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_scenario_seed(std::uint64_t master, std::uint64_t scenario_index)
{
    return derive_frame_seed(master ^ 0xc2b2ae3d27d4eb4fULL, scenario_index, 0);
}

BerCurve run_ber_sweep(const Scenario &sc, unsigned workers)
{
    validate(sc);
    if (workers < 1)
        throw std::invalid_argument("sim: at least one worker required");

    const CompiledScenario cs = compile(sc);

    BerCurve curve;
    curve.name = sc.name;
    curve.seed = sc.seed;
    curve.points.reserve(sc.snr_grid_db.size());

    const auto t0 = std::chrono::steady_clock::now();

    for (std::size_t snr_idx = 0; snr_idx < sc.snr_grid_db.size(); ++snr_idx)
    {
        const double snr_db = sc.snr_grid_db[snr_idx];
        const double sigma2 = std::pow(10.0, -0.1 * snr_db);
        const double noise_std = std::sqrt(0.5 * sigma2); // per real component

        std::int64_t frames = 0, errors = 0, bits = 0;

        while (frames < sc.stop.max_frames && errors < sc.stop.min_bit_errors)
        {
            const std::int64_t batch =
                std::min(batch_size(frames), sc.stop.max_frames - frames);

            auto sim_range = [&](std::int64_t begin, std::int64_t end, FrameOutcome &acc) {
                FrameOutcome local;
                for (std::int64_t f = begin; f < end; ++f)
                {
                    const std::uint64_t seed =
                        derive_frame_seed(sc.seed, std::uint64_t(snr_idx), std::uint64_t(f));
                    FrameOutcome one = simulate_frame(cs, seed, noise_std);
                    local.bits += one.bits;
                    local.errors += one.errors;
                }
                acc = local;
            };

            if (workers == 1)
            {
                FrameOutcome acc;
                sim_range(frames, frames + batch, acc);
                bits += acc.bits;
                errors += acc.errors;
            }
            else
            {
                const std::int64_t chunk = (batch + workers - 1) / workers;
                std::vector<FrameOutcome> acc(workers);
                std::vector<std::thread> pool;
                pool.reserve(workers);
                for (unsigned w = 0; w < workers; ++w)
                {
                    const std::int64_t begin = frames + std::int64_t(w) * chunk;
                    const std::int64_t end = std::min(begin + chunk, frames + batch);
                    if (begin >= end)
                        break;
                    pool.emplace_back(sim_range, begin, end, std::ref(acc[w]));
                }
                for (auto &th : pool)
                    th.join();
                for (const FrameOutcome &a : acc)
                {
                    bits += a.bits;
                    errors += a.errors;
                }
            }

            frames += batch;
        }

        BerPoint p;
        p.snr_db = snr_db;
        p.bits_sent = bits;
        p.bit_errors = errors;
        p.frames = frames;
        p.ber = bits > 0 ? double(errors) / double(bits) : 0.0;
        curve.points.push_back(p);
    }

    curve.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return curve;
}

namespace
{
    double fit_slope(const std::vector<std::pair<double, double>> &xy)
    {
        const double n = double(xy.size());
        double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
        for (auto [x, y] : xy)
        {
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        const double denom = sxx - sx * sx / n;
        if (denom <= 0.0)
            throw std::invalid_argument("sim: diversity fit needs distinct SNR points");
        return (sxy - sx * sy / n) / denom;
    }
}

double estimate_diversity_order(const BerCurve &curve, double ber_lo, double ber_hi)
{
    std::vector<std::pair<double, double>> xy;
    for (const BerPoint &p : curve.points)
        if (p.ber > 0.0 && p.ber >= ber_lo && p.ber <= ber_hi)
            xy.emplace_back(p.snr_db / 10.0, -std::log10(p.ber));
    if (xy.size() < 3)
        throw std::invalid_argument("sim: diversity fit needs at least 3 points inside "
                                    "the BER window");
    return fit_slope(xy);
}

double estimate_diversity_last_decade(const BerCurve &curve)
{
    std::vector<const BerPoint *> positive;
    for (const BerPoint &p : curve.points)
        if (p.ber > 0.0)
            positive.push_back(&p);
    if (positive.size() < 2)
        throw std::invalid_argument("sim: too few positive-BER points for a diversity fit");

    double ber_min = positive[0]->ber;
    for (const BerPoint *p : positive)
        ber_min = std::min(ber_min, p->ber);

    // Points within the last simulated decade; widen toward higher BER when sparse.
    std::vector<const BerPoint *> sel;
    for (const BerPoint *p : positive)
        if (p->ber <= 10.0 * ber_min)
            sel.push_back(p);
    if (sel.size() < 3)
    {
        std::vector<const BerPoint *> sorted = positive;
        std::sort(sorted.begin(), sorted.end(),
                  [](const BerPoint *a, const BerPoint *b) { return a->ber < b->ber; });
        sel.assign(sorted.begin(),
                   sorted.begin() + std::min<std::size_t>(3, sorted.size()));
    }

    std::vector<std::pair<double, double>> xy;
    for (const BerPoint *p : sel)
        xy.emplace_back(p->snr_db / 10.0, -std::log10(p->ber));
    return fit_slope(xy);
}

double snr_at_ber(const BerCurve &curve, double ber)
{
    if (!(ber > 0.0))
        throw std::invalid_argument("sim: target BER must be positive");

    const double target = std::log10(ber);
    for (std::size_t i = 0; i + 1 < curve.points.size(); ++i)
    {
        const BerPoint &a = curve.points[i];
        const BerPoint &b = curve.points[i + 1];
        if (a.ber <= 0.0 || b.ber <= 0.0)
            continue;
        const double la = std::log10(a.ber);
        const double lb = std::log10(b.ber);
        if ((la - target) * (lb - target) <= 0.0 && la != lb)
            return a.snr_db + (b.snr_db - a.snr_db) * (target - la) / (lb - la);
    }
    throw std::invalid_argument("sim: curve does not cross the requested BER");
}

}
