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

#include "ramimo/modem.hpp"

#include <cmath>
#include <stdexcept>

namespace ramimo
{

unsigned bits_per_symbol(ModScheme scheme)
{
    switch (scheme)
    {
    case ModScheme::bpsk:
        return 1;
    case ModScheme::qam4:
        return 2;
    case ModScheme::qam16:
        return 4;
    }
    throw std::invalid_argument("modem: unknown modulation scheme");
}

Constellation build_constellation(ModScheme scheme, double rotation_rad)
{
    Constellation c;
    c.scheme = scheme;
    c.bits_per_symbol = bits_per_symbol(scheme);
    c.rotation_rad = rotation_rad;

    const std::size_t m = std::size_t(1) << c.bits_per_symbol;
    c.points.resize(m);
    c.labels.resize(m);
    c.point_of_label.resize(m);

    const std::complex<double> rot = std::polar(1.0, rotation_rad);

    if (scheme == ModScheme::bpsk)
    {
        c.points[0] = rot * 1.0;  // bit 0
        c.points[1] = rot * -1.0; // bit 1
        c.labels = {0, 1};
    }
    else
    {
        // Square grid with odd integer levels, Gray-coded independently per axis.
        // Average energy of the raw grid is 2 * mean(level^2), normalized to 1.
        const unsigned half = c.bits_per_symbol / 2;
        const std::size_t side = std::size_t(1) << half;
        double energy = 0.0;
        for (std::size_t i = 0; i < side; ++i)
        {
            double level = double(2 * i) - double(side - 1);
            energy += level * level;
        }
        const double scale = 1.0 / std::sqrt(2.0 * energy / double(side));

        for (std::size_t i = 0; i < side; ++i)
            for (std::size_t q = 0; q < side; ++q)
            {
                std::size_t idx = i * side + q;
                double re = scale * (double(2 * i) - double(side - 1));
                double im = scale * (double(2 * q) - double(side - 1));
                c.points[idx] = rot * std::complex<double>(re, im);
                std::uint32_t gray_i = std::uint32_t(i ^ (i >> 1));
                std::uint32_t gray_q = std::uint32_t(q ^ (q >> 1));
                c.labels[idx] = (gray_i << half) | gray_q;
            }
    }

    for (std::size_t i = 0; i < m; ++i)
        c.point_of_label[c.labels[i]] = std::uint32_t(i);
    return c;
}

std::vector<std::complex<double>> map_bits(const Constellation &c,
                                           std::span<const std::uint8_t> bits)
{
    const unsigned b = c.bits_per_symbol;
    if (bits.size() % b != 0)
        throw std::invalid_argument("modem: bit count is not a multiple of bits per symbol");

    std::vector<std::complex<double>> out(bits.size() / b);
    for (std::size_t s = 0; s < out.size(); ++s)
    {
        std::uint32_t label = 0;
        for (unsigned k = 0; k < b; ++k)
            label = (label << 1) | (bits[s * b + k] & 1u);
        out[s] = c.points[c.point_of_label[label]];
    }
    return out;
}

std::size_t demap_nearest(const Constellation &c, std::complex<double> z)
{
    std::size_t best = 0;
    double best_d = std::norm(z - c.points[0]);
    for (std::size_t i = 1; i < c.points.size(); ++i)
    {
        double d = std::norm(z - c.points[i]);
        if (d < best_d)
        {
            best_d = d;
            best = i;
        }
    }
    return best;
}

void append_bits(const Constellation &c, std::size_t idx, std::vector<std::uint8_t> &out)
{
    const std::uint32_t label = c.labels[idx];
    for (unsigned k = c.bits_per_symbol; k-- > 0;)
        out.push_back(std::uint8_t((label >> k) & 1u));
}

}
