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

#ifndef RAMIMO_SIM_HPP
#define RAMIMO_SIM_HPP

#include <armadillo>
#include <cstdint>
#include <string>
#include <vector>

#include "ramimo/modem.hpp"

namespace ramimo
{
    enum class Scheme
    {
        proposed, // equal-gain reconfigured channel + rate-one real design + ZF
        ostbc,    // 2x2 complex orthogonal design, closed-form ML
        qostbc,   // 4x4 quasi-orthogonal design, pairwise ML, rotated second pair
        lens      // open-loop spatial multiplexing with ZF, one stream per antenna
    };

    struct StopRule
    {
        std::int64_t min_bit_errors = 200;  // stop a point once this many errors are seen
        std::int64_t max_frames = 1000000;  // hard frame cap per point
    };

    struct Scenario
    {
        std::string name = "proposed";       // output label, also the CSV file stem
        Scheme scheme = Scheme::proposed;
        arma::uword n_t = 2;
        arma::uword n_r = 2;
        ModScheme constellation = ModScheme::qam16;
        double rotation_rad = 0.0;           // qostbc only: rotation of the s3/s4 alphabet
        double k_factor_db = 2.0;
        bool pure_rayleigh = false;
        std::vector<double> snr_grid_db;
        StopRule stop;
        std::uint64_t seed = 1;
    };

    struct BerPoint
    {
        double snr_db = 0.0;
        std::int64_t bits_sent = 0;
        std::int64_t bit_errors = 0;
        std::int64_t frames = 0;
        double ber = 0.0;
    };

    struct BerCurve
    {
        std::string name;
        std::uint64_t seed = 0;
        std::vector<BerPoint> points;
        double wall_time_s = 0.0;
    };

    // Throws std::invalid_argument on inconsistent scheme/antenna/constellation choices
    // or an empty SNR grid.
    void validate(const Scenario &sc);

    // Information bits per channel use (per time slot), e.g. 4 for the 2x2 rate-one
    // design with 16-QAM. Used to keep throughput parity across compared schemes.
    unsigned bits_per_channel_use(const Scenario &sc);

    // Seed of the frame-local generator. Bijective splitmix64 finalizer over the master
    // seed and a counter built from the SNR point index and the global frame index, so
    // every frame is an independent, reproducible stream no matter which worker runs it.
    std::uint64_t derive_frame_seed(std::uint64_t master, std::uint64_t snr_index,
                                    std::uint64_t frame_index);

    // Per-scheme seeds for multi-curve runs, derived from the run master seed.
    std::uint64_t derive_scenario_seed(std::uint64_t master, std::uint64_t scenario_index);

    // Monte-Carlo BER sweep over the scenario's SNR grid. Frames are simulated in
    // batches whose sizes depend only on the frame budget; workers split each batch by
    // global frame index and the stop rule is evaluated at batch boundaries only, so
    // results are byte-identical for any worker count. workers < 1 is rejected.
    BerCurve run_ber_sweep(const Scenario &sc, unsigned workers = 1);

    // Least-squares slope of -log10(BER) versus SNR/10 dB, fitted over points whose BER
    // lies in [ber_lo, ber_hi]; an estimate of the diversity order in that window.
    // Throws std::invalid_argument if fewer than three points fall inside the window.
    double estimate_diversity_order(const BerCurve &curve, double ber_lo = 1e-6,
                                    double ber_hi = 1e-2);

    // Same fit restricted to the last simulated decade: points with BER inside
    // [ber_min, 10 * ber_min], widened toward higher BER until >= 3 points qualify.
    double estimate_diversity_last_decade(const BerCurve &curve);

    // Linear interpolation (in dB, against log10 BER) of the SNR at which the curve
    // crosses the given BER. Throws std::invalid_argument if the curve never crosses it.
    double snr_at_ber(const BerCurve &curve, double ber);
}

#endif
