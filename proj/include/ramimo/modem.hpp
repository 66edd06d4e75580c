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

#ifndef RAMIMO_MODEM_HPP
#define RAMIMO_MODEM_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace ramimo
{
    enum class ModScheme
    {
        bpsk,  // 1 bit/symbol, points +1 / -1
        qam4,  // 2 bits/symbol, Gray-coded square grid
        qam16  // 4 bits/symbol, Gray-coded square grid
    };

    // Memoryless constellation with unit average energy. Square QAM uses an independent
    // Gray code per I/Q axis, so nearest neighbors always differ in exactly one bit.
    // An optional rotation e^{j phi} is applied to every point (used by the quasi-
    // orthogonal code, which draws half its symbols from a rotated alphabet).
    struct Constellation
    {
        ModScheme scheme = ModScheme::bpsk;
        unsigned bits_per_symbol = 1;
        double rotation_rad = 0.0;
        std::vector<std::complex<double>> points; // size 2^bits_per_symbol
        std::vector<std::uint32_t> labels;        // labels[i] = bit pattern of points[i]
        std::vector<std::uint32_t> point_of_label; // inverse of labels

        std::size_t size() const { return points.size(); }
    };

    Constellation build_constellation(ModScheme scheme, double rotation_rad = 0.0);

    unsigned bits_per_symbol(ModScheme scheme);

    // Maps bits (one per element, values 0/1, MSB of each symbol first) onto points.
    // Throws std::invalid_argument if bits.size() is not a multiple of bits_per_symbol.
    std::vector<std::complex<double>> map_bits(const Constellation &c,
                                               std::span<const std::uint8_t> bits);

    // Minimum-Euclidean-distance slicer; ties break toward the lowest point index.
    std::size_t demap_nearest(const Constellation &c, std::complex<double> z);

    // Appends the bit label (MSB first) of point index idx to out.
    void append_bits(const Constellation &c, std::size_t idx, std::vector<std::uint8_t> &out);
}

#endif
