/**************************************************************************
 * verify.hpp
 *
 * Copyright 2026 The rsrepair Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include "rsrepair/scheme.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace rsrepair {

/**
 * A random valid scheme for RS(A, q^d - r) at node 0: random d-dimensional
 * A, random basis, polynomials g_j = omega_j + (random nonconstant part of
 * degree < r) for j below a random cut and g_j = omega_j after it, with
 * omega independent; finally mixed by a random invertible matrix over B so
 * the result is generally not in normal form.
 */
RepairScheme random_scheme(const FieldTower& f, unsigned d, unsigned r, std::mt19937_64& rng);

/// Uniformly random invertible n x n matrix over B.
Matrix random_invertible(const FieldTower& f, std::size_t n, std::mt19937_64& rng);

struct SuiteReport {
    std::string name;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::vector<std::string> samples; ///< first few failure messages
    std::vector<std::string> notes;

    bool passed() const noexcept { return checks > 0 && failures == 0; }
    void check(bool ok, const std::function<std::string()>& describe);
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    /// Number of random instances; 0 picks the suite's default.
    std::size_t size = 0;
};

/// expsum weil char duality lemma5 annihilator r3cond bmin weight
const std::vector<std::string>& suite_names();

/// Runs one suite; "all" is not accepted here. Throws ParamViolation for unknown names.
SuiteReport run_suite(std::string_view name, const VerifyOptions& opt);

} // namespace rsrepair
