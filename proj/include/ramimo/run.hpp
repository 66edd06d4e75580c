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

#ifndef RAMIMO_RUN_HPP
#define RAMIMO_RUN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ramimo/sim.hpp"

namespace ramimo
{
    // Configuration error (bad flag value, malformed config file, inconsistent
    // scenario). The CLI maps it to exit code 1.
    struct ConfigError : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    struct SnrGrid
    {
        double start_db = 0.0;
        double step_db = 2.0;
        double stop_db = 20.0;

        std::vector<double> values() const;
    };

    // Parses "start:step:stop" (step > 0, stop >= start). Throws ConfigError.
    SnrGrid parse_snr_grid(const std::string &text);

    struct RunConfig
    {
        std::string preset = "fig3";   // fig3 | fig4 | custom
        std::uint64_t seed = 1;
        std::string out_dir = "out";
        unsigned workers = 1;
        bool snr_overridden = false;   // true once --snr or a config snr key was seen
        SnrGrid snr;

        // custom preset only
        Scenario custom;
        bool custom_filled = false;
    };

    // Applies "key = value" lines from a config file on top of cfg. '#' starts a
    // comment; blank lines are skipped. Unknown keys or bad values raise ConfigError
    // with the offending line number.
    void apply_config_file(RunConfig &cfg, const std::string &path);

    // Scenario sets behind the bundled presets. Each scenario gets its own seed derived
    // from the master seed; all scenarios in a set carry the same throughput in
    // bits per channel use.
    //
    // fig3: 2x2 link, K = 2 dB. Rate-one real design + ZF and the 2x2 complex
    //       orthogonal design, both 16-QAM, against a 4-QAM two-stream ZF baseline.
    // fig4: 4x4 link, K = 2 dB. Rate-one real design + ZF (16-QAM) against the rotated
    //       quasi-orthogonal design (16-QAM) and a BPSK four-stream ZF baseline.
    std::vector<Scenario> preset_scenarios(const RunConfig &cfg);

    // Writes "<out_dir>/<scenario name>.csv" with the exact header
    // snr_db,ber,bits_sent,bit_errors,frames and locale-independent number formatting,
    // so identical curves serialize to identical bytes. Returns the file path.
    std::string write_curve_csv(const std::string &out_dir, const BerCurve &curve);

    // Writes "<out_dir>/manifest.txt" recording preset, seed, grid, workers and library
    // version. Returns the file path.
    std::string write_manifest(const std::string &out_dir, const RunConfig &cfg,
                               const std::vector<BerCurve> &curves);

    // Runs every scenario of the configured preset and writes the outputs.
    std::vector<BerCurve> execute_run(const RunConfig &cfg);
}

#endif
