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

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ramimo/run.hpp"
#include "ramimo/verify.hpp"
#include "ramimo/version.hpp"

namespace
{
    // Exit codes: 0 success, 1 configuration error, 2 runtime error,
    // 3 verification failure.
    constexpr int kExitOk = 0;
    constexpr int kExitConfig = 1;
    constexpr int kExitRuntime = 2;
    constexpr int kExitVerification = 3;

    int do_run(const ramimo::RunConfig &cfg)
    {
        const std::vector<ramimo::BerCurve> curves = ramimo::execute_run(cfg);
        for (const ramimo::BerCurve &c : curves)
        {
            std::printf("%-10s %zu points, %.1f s\n", c.name.c_str(), c.points.size(),
                        c.wall_time_s);
            for (const ramimo::BerPoint &p : c.points)
                std::printf("  %6.2f dB  ber %.3e  (%lld errors / %lld bits, %lld frames)\n",
                            p.snr_db, p.ber, (long long)p.bit_errors, (long long)p.bits_sent,
                            (long long)p.frames);
        }
        std::printf("results written to %s\n", cfg.out_dir.c_str());
        return kExitOk;
    }

    int do_verify(const std::string &suite)
    {
        std::vector<ramimo::SuiteResult> results;
        if (suite.empty() || suite == "all")
            results = ramimo::verify_all();
        else
            results.push_back(ramimo::verify_suite(suite));

        bool all_passed = true;
        for (const ramimo::SuiteResult &r : results)
        {
            std::printf("%s %-14s %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                        r.detail.c_str());
            all_passed = all_passed && r.passed;
        }
        return all_passed ? kExitOk : kExitVerification;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"link-level BER simulator for reconfigurable-antenna MIMO"};
    app.set_version_flag("--version", std::string("ramimo ") + ramimo::version());
    app.require_subcommand(1);

    // run
    CLI::App *run_cmd = app.add_subcommand("run", "simulate BER curves and write CSV files");
    std::string preset = "fig3";
    std::string config_path;
    std::uint64_t seed = 1;
    std::string snr_text;
    std::string out_dir = "out";
    unsigned workers = 1;
    run_cmd->add_option("--preset", preset, "scenario set: fig3, fig4 or custom")
        ->check(CLI::IsMember({"fig3", "fig4", "custom"}));
    run_cmd->add_option("--config", config_path, "key = value config file");
    run_cmd->add_option("--seed", seed, "master seed for the whole run");
    run_cmd->add_option("--snr", snr_text, "SNR grid start:step:stop in dB");
    run_cmd->add_option("--out", out_dir, "output directory");
    run_cmd->add_option("--workers", workers, "worker threads; results do not depend on it")
        ->check(CLI::Range(1u, 1024u));

    // verify
    CLI::App *verify_cmd =
        app.add_subcommand("verify", "run the built-in verification suites");
    std::string suite;
    std::vector<std::string> suite_choices = ramimo::verify_suite_names();
    suite_choices.insert(suite_choices.begin(), "all");
    verify_cmd->add_option("--suite", suite, "suite to run (default: all)")
        ->check(CLI::IsMember(suite_choices));

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForVersion &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return kExitConfig;
    }

    try
    {
        if (run_cmd->parsed())
        {
            ramimo::RunConfig cfg;

            // Precedence: built-in defaults, then the config file, then explicit flags.
            if (run_cmd->count("--config"))
                ramimo::apply_config_file(cfg, config_path);
            if (run_cmd->count("--preset"))
                cfg.preset = preset;
            if (run_cmd->count("--seed"))
                cfg.seed = seed;
            if (run_cmd->count("--out"))
                cfg.out_dir = out_dir;
            if (run_cmd->count("--workers"))
                cfg.workers = workers;
            if (run_cmd->count("--snr"))
            {
                cfg.snr = ramimo::parse_snr_grid(snr_text);
                cfg.snr_overridden = true;
            }
            return do_run(cfg);
        }
        return do_verify(suite);
    }
    catch (const ramimo::ConfigError &e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    }
    catch (const std::invalid_argument &e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}
