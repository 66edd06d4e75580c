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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "ramimo/run.hpp"

using namespace ramimo;

namespace
{
    std::string slurp(const std::string &path)
    {
        std::ifstream f(path, std::ios::binary);
        REQUIRE(f.good());
        return std::string(std::istreambuf_iterator<char>(f),
                           std::istreambuf_iterator<char>());
    }

    struct TempDir
    {
        std::filesystem::path path;
        TempDir(const char *tag)
            : path(std::filesystem::temp_directory_path() /
                   (std::string("ramimo_test_") + tag))
        {
            std::filesystem::remove_all(path);
            std::filesystem::create_directories(path);
        }
        ~TempDir() { std::filesystem::remove_all(path); }
    };

    std::string write_file(const TempDir &dir, const char *name, const std::string &body)
    {
        const std::string p = (dir.path / name).string();
        std::ofstream f(p, std::ios::binary);
        f << body;
        return p;
    }
}

TEST_CASE("SNR grids parse and expand")
{
    const SnrGrid g = parse_snr_grid("0:2:20");
    CHECK(g.start_db == 0.0);
    CHECK(g.step_db == 2.0);
    CHECK(g.stop_db == 20.0);
    const std::vector<double> v = g.values();
    REQUIRE(v.size() == 11);
    CHECK(v.front() == 0.0);
    CHECK(v.back() == 20.0);

    CHECK(parse_snr_grid("5:5:5").values().size() == 1);

    CHECK_THROWS_AS(parse_snr_grid("banana"), ConfigError);
    CHECK_THROWS_AS(parse_snr_grid("0:0:10"), ConfigError);
    CHECK_THROWS_AS(parse_snr_grid("10:2:0"), ConfigError);
    CHECK_THROWS_AS(parse_snr_grid("0:2"), ConfigError);
}

TEST_CASE("config files override defaults and report bad lines")
{
    TempDir dir("cfg");

    RunConfig cfg;
    const std::string good = write_file(dir, "good.cfg",
                                        "# comment\n"
                                        "preset = fig4\n"
                                        "seed = 99\n"
                                        "workers = 3\n"
                                        "\n"
                                        "snr = 0:4:8\n");
    apply_config_file(cfg, good);
    CHECK(cfg.preset == "fig4");
    CHECK(cfg.seed == 99);
    CHECK(cfg.workers == 3);
    CHECK(cfg.snr_overridden);
    CHECK(cfg.snr.values() == std::vector<double>{0.0, 4.0, 8.0});

    RunConfig fresh;
    const std::string bad_key = write_file(dir, "bad_key.cfg",
                                           "preset = fig3\n"
                                           "flavour = vanilla\n");
    try
    {
        apply_config_file(fresh, bad_key);
        FAIL("expected ConfigError");
    }
    catch (const ConfigError &e)
    {
        CHECK(std::string(e.what()).find(bad_key + ":2") != std::string::npos);
    }

    RunConfig fresh2;
    const std::string bad_val = write_file(dir, "bad_val.cfg", "seed = pony\n");
    CHECK_THROWS_AS(apply_config_file(fresh2, bad_val), ConfigError);

    RunConfig fresh3;
    CHECK_THROWS_AS(apply_config_file(fresh3, (dir.path / "missing.cfg").string()),
                    ConfigError);
}

TEST_CASE("custom scenarios come from config keys")
{
    TempDir dir("custom");
    RunConfig cfg;
    const std::string path = write_file(dir, "custom.cfg",
                                        "preset = custom\n"
                                        "name = trial\n"
                                        "scheme = proposed\n"
                                        "n_t = 4\n"
                                        "n_r = 2\n"
                                        "constellation = qam16\n"
                                        "snr = 0:2:4\n"
                                        "min_bit_errors = 10\n"
                                        "max_frames = 50\n");
    apply_config_file(cfg, path);

    const std::vector<Scenario> scenarios = preset_scenarios(cfg);
    REQUIRE(scenarios.size() == 1);
    CHECK(scenarios[0].name == "trial");
    CHECK(scenarios[0].scheme == Scheme::proposed);
    CHECK(scenarios[0].n_t == 4);
    CHECK(scenarios[0].n_r == 2);
    CHECK(scenarios[0].stop.min_bit_errors == 10);
    CHECK(scenarios[0].stop.max_frames == 50);
}

TEST_CASE("bundled presets hold throughput parity across schemes")
{
    RunConfig cfg;

    cfg.preset = "fig3";
    std::vector<Scenario> fig3 = preset_scenarios(cfg);
    REQUIRE(fig3.size() == 3);
    for (const Scenario &s : fig3)
        CHECK(bits_per_channel_use(s) == 4);
    CHECK(fig3[0].scheme == Scheme::proposed);
    CHECK(fig3[0].n_t == 2);

    cfg.preset = "fig4";
    std::vector<Scenario> fig4 = preset_scenarios(cfg);
    REQUIRE(fig4.size() == 3);
    for (const Scenario &s : fig4)
        CHECK(bits_per_channel_use(s) == 4);
    CHECK(fig4[0].n_t == 4);

    cfg.preset = "nonsense";
    CHECK_THROWS_AS(preset_scenarios(cfg), ConfigError);
}

TEST_CASE("scenario seeds differ across the curves of one run")
{
    RunConfig cfg;
    cfg.preset = "fig3";
    const std::vector<Scenario> scenarios = preset_scenarios(cfg);
    CHECK(scenarios[0].seed != scenarios[1].seed);
    CHECK(scenarios[1].seed != scenarios[2].seed);
}

TEST_CASE("curve serialization is byte-stable")
{
    TempDir dir("csv");

    BerCurve curve;
    curve.name = "fmt";
    BerPoint p1;
    p1.snr_db = 0.0;
    p1.ber = 0.015625;
    p1.bits_sent = 64000;
    p1.bit_errors = 1000;
    p1.frames = 1000;
    BerPoint p2;
    p2.snr_db = 10.5;
    p2.ber = 0.0;
    p2.bits_sent = 128000;
    p2.bit_errors = 0;
    p2.frames = 2000;
    curve.points = {p1, p2};

    const std::string path = write_curve_csv(dir.path.string(), curve);
    CHECK(slurp(path) ==
          "snr_db,ber,bits_sent,bit_errors,frames\n"
          "0.00,1.562500000e-02,64000,1000,1000\n"
          "10.50,0.000000000e+00,128000,0,2000\n");
}

TEST_CASE("full runs write one CSV per scenario plus a manifest")
{
    TempDir dir("run");

    RunConfig cfg;
    cfg.preset = "custom";
    cfg.custom_filled = true;
    cfg.custom.name = "mini";
    cfg.custom.scheme = Scheme::proposed;
    cfg.custom.n_t = 2;
    cfg.custom.n_r = 2;
    cfg.custom.constellation = ModScheme::qam16;
    cfg.snr = SnrGrid{4.0, 2.0, 4.0};
    cfg.custom.stop.min_bit_errors = 20;
    cfg.custom.stop.max_frames = 5000;
    cfg.seed = 5;
    cfg.out_dir = (dir.path / "out").string();

    const std::vector<BerCurve> curves = execute_run(cfg);
    REQUIRE(curves.size() == 1);
    CHECK(std::filesystem::exists(dir.path / "out" / "mini.csv"));
    CHECK(std::filesystem::exists(dir.path / "out" / "manifest.txt"));

    const std::string first = slurp((dir.path / "out" / "mini.csv").string());
    const std::vector<BerCurve> again = execute_run(cfg);
    CHECK(slurp((dir.path / "out" / "mini.csv").string()) == first);
}
