/**************************************************************************
 * bounds.hpp
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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rsrepair {

enum class Quantity { Io, Bandwidth };

/// Named bounds. The tags are also the CLI spellings.
enum class BoundTheorem { Auto, Coro11, Thm4, Thm6, Thm5, Thm8 };

std::string_view to_string(BoundTheorem t) noexcept;
std::optional<BoundTheorem> parse_bound_theorem(std::string_view s) noexcept;

struct BoundQuery {
    std::uint64_t q = 2;
    unsigned ell = 1;
    unsigned d = 1;
    unsigned r = 2;
};

struct BoundCandidate {
    BoundTheorem theorem;
    std::int64_t value;
    bool tight_known;
    std::string case_label; ///< "(i)", "(ii)", "(iii)" for bandwidth; empty otherwise
};

struct BoundResult {
    std::int64_t value = 0;
    BoundTheorem theorem = BoundTheorem::Auto;
    bool tight_known = false;
    std::string case_label;
    std::vector<BoundCandidate> candidates; ///< every applicable bound
};

/**
 * Lower bound on the I/O cost of repairing RS(A, q^d - r) with dim A = d.
 * With Auto the largest applicable bound wins. Throws UnsupportedRegime when
 * nothing applies (or the requested bound does not apply).
 *
 *   thm4   r = 2:            (n-1)ell - (ell-d+1) q^(d-1)
 *   thm6   r = 3, q = 2:     (n-1)ell - (ell-d+2) 2^(d-1)
 *   coro11 d = ell, r <= p:  (n-1)ell - q^(ell-1) - (r-2)(q-1) q^(ell/2-1)
 *
 * For odd ell the last term is irrational; the bound is rounded up, which
 * is still valid because the I/O cost is an integer.
 */
BoundResult io_lower_bound(const BoundQuery& bq, BoundTheorem which = BoundTheorem::Auto);

/**
 * Lower bound on the bandwidth of I/O-optimal schemes.
 *
 *   thm5 (r = 2, ell-d+1 | ell):
 *     (i)   d = ell, q > 2:  (n-1)ell - q^(ell-1)   (attained by every such scheme)
 *     (ii)  d = ell, q = 2:  (2^ell-1)ell - 3*2^(ell-2)
 *     (iii) d < ell:         (q^d-1)d - q^(2d-ell-1)
 *   thm8 (r = 3, q = 2, d = ell or ell-d+2 | ell):
 *     (n-1)(d-1) - 2^(2d-ell-1) + floor(2^(3d-2ell-4))
 *
 * Negative exponents are evaluated exactly and the result rounded up.
 */
BoundResult bandwidth_lower_bound(const BoundQuery& bq, BoundTheorem which = BoundTheorem::Auto);

/// One feasible point (m, t', a_1 >= ... >= a_t') of the r = 3 weight program.
struct R3Tuple {
    unsigned m = 0;
    unsigned t = 0;
    std::vector<unsigned> a;
    friend auto operator<=>(const R3Tuple&, const R3Tuple&) = default;
};

struct R3Result {
    /// max of 2^(d-m) sum_i 2^(a_i), multiplied by 2^ell to stay integral.
    std::uint64_t scaled_max = 0;
    unsigned scale_log2 = 0;
    std::vector<R3Tuple> argmax; ///< sorted ascending
    std::uint64_t visited = 0;

    /// The lexicographically largest maximizer.
    const R3Tuple& representative() const { return argmax.back(); }
    double value() const noexcept { return static_cast<double>(scaled_max) / static_cast<double>(1ull << scale_log2); }
};

/**
 * Exhaustive maximization of 2^(d-m) sum_{i<=t'} 2^(a_i) over
 * 1 <= t' <= m <= m_max, m-1 >= a_1 >= ... >= a_t' >= 0 with
 * sum_{i <= min(t', ell-d+2)} a_i <= (ell-d+1) m. Throws BudgetExceeded once
 * more than `budget` tuples would be visited.
 */
R3Result r3cond_max_bruteforce(unsigned ell, unsigned d, unsigned m_max,
                               std::uint64_t budget = 50'000'000);

/**
 * min sum_{i=2}^n b_i over 0 <= b_i <= m subject to
 *   r = 2: sum q^(m-b_i) <= q^d + q^ell - q^(ell-m) - 1
 *   r = 3: sum 2^(m-b_i) <= 2^(ell+1) + 2^d - 2^(ell-m+1) - 1
 * with n = q^d. Solved by scanning balanced assignments (all b_i in
 * {v, v+1}), which minimize the left side for a given total. Throws
 * Infeasible when b_i = m for all i already violates the budget.
 */
std::uint64_t bmin_bruteforce(std::uint64_t q, unsigned ell, unsigned d, unsigned m, unsigned r);

/// The same minimum by enumerating every multiset {b_i}; only for n <= 16.
std::uint64_t bmin_literal(std::uint64_t q, unsigned ell, unsigned d, unsigned m, unsigned r);

/// (n-1)(ell-m) + bmin: the bandwidth bound implied by a given m.
std::uint64_t bandwidth_from_bmin(std::uint64_t q, unsigned ell, unsigned d, unsigned m, unsigned r);

} // namespace rsrepair
