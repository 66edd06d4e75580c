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

#include "ramimo/run.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ramimo/version.hpp"

namespace ramimo
{

namespace
{
    std::string trim(const std::string &s)
    {
        const char *ws = " \t\r\n";
        auto b = s.find_first_not_of(ws);
        if (b == std::string::npos)
            return "";
        auto e = s.find_last_not_of(ws);
        return s.substr(b, e - b + 1);
    }

    double parse_double(const std::string &text, const std::string &what)
    {
        try
        {
            std::size_t used = 0;
            double v = std::stod(text, &used);
            if (used != text.size() || !std::isfinite(v))
                throw std::invalid_argument(text);
            return v;
        }
        catch (const std::exception &)
        {
            throw ConfigError(what + ": not a number: '" + text + "'");
        }
    }

    std::uint64_t parse_u64(const std::string &text, const std::string &what)
    {
        std::uint64_t v = 0;
        auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc() || p != text.data() + text.size())
            throw ConfigError(what + ": not an unsigned integer: '" + text + "'");
        return v;
    }

    // Locale-independent formatting, so equal curves always serialize to equal bytes.
    std::string format_fixed(double v, int precision)
    {
        char buf[64];
        auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed,
                                     precision);
        return std::string(buf, p);
    }

    std::string format_sci(double v, int precision)
    {
        char buf[64];
        auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v,
                                     std::chars_format::scientific, precision);
        return std::string(buf, p);
    }

    const char *scheme_name(Scheme s)
    {
        switch (s)
        {
        case Scheme::proposed:
            return "proposed";
        case Scheme::ostbc:
            return "ostbc";
        case Scheme::qostbc:
            return "qostbc";
        case Scheme::lens:
            return "lens";
        }
        return "?";
    }

    const char *mod_name(ModScheme m)
    {
        switch (m)
        {
        case ModScheme::bpsk:
            return "bpsk";
        case ModScheme::qam4:
            return "qam4";
        case ModScheme::qam16:
            return "qam16";
        }
        return "?";
    }
}

std::vector<double> SnrGrid::values() const
{
    std::vector<double> v;
    const auto n = std::size_t(std::llround((stop_db - start_db) / step_db)) + 1;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        double x = start_db + double(i) * step_db;
        if (x > stop_db + 1e-9 * step_db)
            break;
        v.push_back(x);
    }
    return v;
}

SnrGrid parse_snr_grid(const std::string &text)
{
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text)
    {
        if (ch == ':')
        {
            parts.push_back(cur);
            cur.clear();
        }
        else
            cur += ch;
    }
    parts.push_back(cur);
    if (parts.size() != 3)
        throw ConfigError("snr: expected start:step:stop, got '" + text + "'");

    SnrGrid g;
    g.start_db = parse_double(trim(parts[0]), "snr start");
    g.step_db = parse_double(trim(parts[1]), "snr step");
    g.stop_db = parse_double(trim(parts[2]), "snr stop");
    if (g.step_db <= 0.0)
        throw ConfigError("snr: step must be positive");
    if (g.stop_db < g.start_db)
        throw ConfigError("snr: stop must not be below start");
    return g;
}

void apply_config_file(RunConfig &cfg, const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line))
    {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;

        const auto where = path + ":" + std::to_string(lineno);
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(where + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty())
            throw ConfigError(where + ": expected key = value");

        if (key == "preset")
        {
            if (val != "fig3" && val != "fig4" && val != "custom")
                throw ConfigError(where + ": unknown preset '" + val + "'");
            cfg.preset = val;
        }
        else if (key == "seed")
            cfg.seed = parse_u64(val, where);
        else if (key == "out")
            cfg.out_dir = val;
        else if (key == "workers")
        {
            std::uint64_t w = parse_u64(val, where);
            if (w < 1 || w > 1024)
                throw ConfigError(where + ": workers must be in [1, 1024]");
            cfg.workers = unsigned(w);
        }
        else if (key == "snr")
        {
            cfg.snr = parse_snr_grid(val);
            cfg.snr_overridden = true;
        }
        else if (key == "name")
        {
            cfg.custom.name = val;
            cfg.custom_filled = true;
        }
        else if (key == "scheme")
        {
            if (val == "proposed")
                cfg.custom.scheme = Scheme::proposed;
            else if (val == "ostbc")
                cfg.custom.scheme = Scheme::ostbc;
            else if (val == "qostbc")
                cfg.custom.scheme = Scheme::qostbc;
            else if (val == "lens")
                cfg.custom.scheme = Scheme::lens;
            else
                throw ConfigError(where + ": unknown scheme '" + val + "'");
            cfg.custom_filled = true;
        }
        else if (key == "n_t")
        {
            cfg.custom.n_t = arma::uword(parse_u64(val, where));
            cfg.custom_filled = true;
        }
        else if (key == "n_r")
        {
            cfg.custom.n_r = arma::uword(parse_u64(val, where));
            cfg.custom_filled = true;
        }
        else if (key == "constellation")
        {
            if (val == "bpsk")
                cfg.custom.constellation = ModScheme::bpsk;
            else if (val == "qam4")
                cfg.custom.constellation = ModScheme::qam4;
            else if (val == "qam16")
                cfg.custom.constellation = ModScheme::qam16;
            else
                throw ConfigError(where + ": unknown constellation '" + val + "'");
            cfg.custom_filled = true;
        }
        else if (key == "rotation_deg")
        {
            cfg.custom.rotation_rad = parse_double(val, where) * M_PI / 180.0;
            cfg.custom_filled = true;
        }
        else if (key == "k_factor_db")
        {
            cfg.custom.k_factor_db = parse_double(val, where);
            cfg.custom_filled = true;
        }
        else if (key == "rayleigh")
        {
            if (val == "true" || val == "1")
                cfg.custom.pure_rayleigh = true;
            else if (val == "false" || val == "0")
                cfg.custom.pure_rayleigh = false;
            else
                throw ConfigError(where + ": rayleigh must be true or false");
            cfg.custom_filled = true;
        }
        else if (key == "min_bit_errors")
        {
            cfg.custom.stop.min_bit_errors = std::int64_t(parse_u64(val, where));
            cfg.custom_filled = true;
        }
        else if (key == "max_frames")
        {
            cfg.custom.stop.max_frames = std::int64_t(parse_u64(val, where));
            cfg.custom_filled = true;
        }
        else
            throw ConfigError(where + ": unknown key '" + key + "'");
    }
}

std::vector<Scenario> preset_scenarios(const RunConfig &cfg)
{
    std::vector<Scenario> out;

    auto finish = [&cfg](Scenario s, std::size_t index,
                         const SnrGrid &fallback) -> Scenario {
        s.snr_grid_db = (cfg.snr_overridden ? cfg.snr : fallback).values();
        s.seed = derive_scenario_seed(cfg.seed, index);
        try
        {
            validate(s);
        }
        catch (const std::invalid_argument &e)
        {
            throw ConfigError(std::string("scenario '") + s.name + "': " + e.what());
        }
        return s;
    };

    if (cfg.preset == "fig3")
    {
        // 2x2 link at 4 bits per channel use for every scheme.
        const SnrGrid grid{0.0, 2.0, 20.0};

        Scenario proposed;
        proposed.name = "proposed";
        proposed.scheme = Scheme::proposed;
        proposed.n_t = proposed.n_r = 2;
        proposed.constellation = ModScheme::qam16;
        out.push_back(finish(proposed, 0, grid));

        Scenario ostbc;
        ostbc.name = "ostbc";
        ostbc.scheme = Scheme::ostbc;
        ostbc.n_t = ostbc.n_r = 2;
        ostbc.constellation = ModScheme::qam16;
        out.push_back(finish(ostbc, 1, grid));

        Scenario lens;
        lens.name = "lens";
        lens.scheme = Scheme::lens;
        lens.n_t = lens.n_r = 2;
        lens.constellation = ModScheme::qam4;
        out.push_back(finish(lens, 2, grid));
    }
    else if (cfg.preset == "fig4")
    {
        // 4x4 link at 4 bits per channel use for every scheme.
        const SnrGrid grid{0.0, 2.0, 16.0};

        Scenario proposed;
        proposed.name = "proposed";
        proposed.scheme = Scheme::proposed;
        proposed.n_t = proposed.n_r = 4;
        proposed.constellation = ModScheme::qam16;
        out.push_back(finish(proposed, 0, grid));

        Scenario qostbc;
        qostbc.name = "qostbc";
        qostbc.scheme = Scheme::qostbc;
        qostbc.n_t = qostbc.n_r = 4;
        qostbc.constellation = ModScheme::qam16;
        qostbc.rotation_rad = M_PI / 4.0;
        out.push_back(finish(qostbc, 1, grid));

        Scenario lens;
        lens.name = "lens";
        lens.scheme = Scheme::lens;
        lens.n_t = lens.n_r = 4;
        lens.constellation = ModScheme::bpsk;
        out.push_back(finish(lens, 2, grid));
    }
    else if (cfg.preset == "custom")
    {
        if (!cfg.custom_filled)
            throw ConfigError("the custom preset needs scenario keys from a config file");
        out.push_back(finish(cfg.custom, 0, cfg.snr));
    }
    else
        throw ConfigError("unknown preset '" + cfg.preset + "'");

    return out;
}

std::string write_curve_csv(const std::string &out_dir, const BerCurve &curve)
{
    std::filesystem::create_directories(out_dir);
    const std::string path = out_dir + "/" + curve.name + ".csv";
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot write '" + path + "'");

    f << "snr_db,ber,bits_sent,bit_errors,frames\n";
    for (const BerPoint &p : curve.points)
        f << format_fixed(p.snr_db, 2) << ',' << format_sci(p.ber, 9) << ',' << p.bits_sent
          << ',' << p.bit_errors << ',' << p.frames << '\n';
    if (!f.flush())
        throw std::runtime_error("write failed for '" + path + "'");
    return path;
}

std::string write_manifest(const std::string &out_dir, const RunConfig &cfg,
                           const std::vector<BerCurve> &curves)
{
    std::filesystem::create_directories(out_dir);
    const std::string path = out_dir + "/manifest.txt";
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot write '" + path + "'");

    f << "tool = ramimo " << version() << "\n";
    f << "preset = " << cfg.preset << "\n";
    f << "seed = " << cfg.seed << "\n";
    f << "workers = " << cfg.workers << "\n";

    const std::vector<Scenario> scenarios = preset_scenarios(cfg);
    for (std::size_t i = 0; i < scenarios.size(); ++i)
    {
        const Scenario &s = scenarios[i];
        f << "scenario " << s.name << " = scheme:" << scheme_name(s.scheme) << " n_t:"
          << s.n_t << " n_r:" << s.n_r << " constellation:" << mod_name(s.constellation)
          << " bits_per_use:" << bits_per_channel_use(s) << " seed:" << s.seed << " snr:";
        for (std::size_t k = 0; k < s.snr_grid_db.size(); ++k)
            f << (k ? "," : "") << format_fixed(s.snr_grid_db[k], 2);
        f << "\n";
        if (i < curves.size())
            f << "wall_time_s " << s.name << " = " << format_fixed(curves[i].wall_time_s, 3)
              << "\n";
    }
    if (!f.flush())
        throw std::runtime_error("write failed for '" + path + "'");
    return path;
}

std::vector<BerCurve> execute_run(const RunConfig &cfg)
{
    const std::vector<Scenario> scenarios = preset_scenarios(cfg);
    std::vector<BerCurve> curves;
    curves.reserve(scenarios.size());
    for (const Scenario &s : scenarios)
    {
        curves.push_back(run_ber_sweep(s, cfg.workers));
        write_curve_csv(cfg.out_dir, curves.back());
    }
    write_manifest(cfg.out_dir, cfg, curves);
    return curves;
}

}
