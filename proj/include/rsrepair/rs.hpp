/**************************************************************************
 * rs.hpp
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

#include "rsrepair/basis.hpp"
#include "rsrepair/poly.hpp"
#include "rsrepair/subspace.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace rsrepair {

/// Uniformly random element of F.
Element random_element(const FieldTower& f, std::mt19937_64& rng);

/**
 * RS(A, k): evaluations of polynomials of degree < k on the points of the
 * subspace A, in A's enumeration order. Node 0 is always the point 0.
 */
class RSCode {
public:
    RSCode(Subspace evaluation_set, std::size_t k);

    const FieldTower& tower() const noexcept { return a_.tower(); }
    const Subspace& evaluation_set() const noexcept { return a_; }
    const std::vector<Element>& points() const noexcept { return points_; }
    std::size_t n() const noexcept { return points_.size(); }
    std::size_t k() const noexcept { return k_; }
    std::size_t r() const noexcept { return n() - k_; }

    /// Throws DegreeTooHigh when deg(message) >= k.
    std::vector<Element> encode(const Polynomial& message) const;
    Polynomial random_message(std::mt19937_64& rng) const;
    std::vector<Element> random_codeword(std::uint64_t seed) const;

    /// RS(A, n - k); equal to the dual code because A is additively closed.
    RSCode dual() const { return RSCode(a_, r()); }

private:
    Subspace a_;
    std::vector<Element> points_;
    std::size_t k_;
};

struct DualCheckReport {
    std::size_t trials = 0;
    std::size_t scalar_failures = 0; ///< sum_j g_j c_j != 0 over F
    std::size_t vector_failures = 0; ///< the vectorized pairing != 0 over B
    std::size_t disagreements = 0;   ///< the two checks gave different verdicts
    bool ok() const noexcept { return scalar_failures == 0 && vector_failures == 0 && disagreements == 0; }
};

/**
 * Pairs random codewords of the code with random codewords of its dual and
 * checks orthogonality both over F and, through the basis pair, over B:
 * sum_j Phi_hat(g_j) . Phi(c_j) = Tr(sum_j g_j c_j).
 */
DualCheckReport dual_inner_product_check(const RSCode& code, const BasisPair& bp, std::size_t trials,
                                         std::uint64_t seed);

} // namespace rsrepair
