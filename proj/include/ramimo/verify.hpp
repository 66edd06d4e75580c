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

#ifndef RAMIMO_VERIFY_HPP
#define RAMIMO_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace ramimo
{
    struct SuiteResult
    {
        std::string name;
        bool passed = false;
        std::string detail; // one-line measurement summary
    };

    // Integer-exact dispersion identities of the rate-one real designs, n_t in {2,4,8}.
    SuiteResult verify_dispersion();

    // Equivalent-channel orthogonality matrix^T matrix == gain * I over 1000 random
    // Rician equal-gain channels per size, n_t in {2,4}, relative tolerance 1e-10.
    SuiteResult verify_orthogonality(std::uint64_t seed = 20260816);

    // Equal-gain reconfiguration yields |h| with imaginary residue <= 1e-12 over
    // 10000 random channels.
    SuiteResult verify_equal_gain(std::uint64_t seed = 20260816);

    // ZF and exhaustive ML decide identically on noisy 2x2 16-QAM frames.
    SuiteResult verify_zf_ml_equivalence(std::uint64_t seed = 20260816,
                                         std::size_t frames = 2000);

    // All of the above, in order. Names are stable identifiers for --suite.
    std::vector<SuiteResult> verify_all();

    // Single suite by name; throws std::invalid_argument on an unknown name.
    SuiteResult verify_suite(const std::string &name);

    std::vector<std::string> verify_suite_names();
}

#endif
