/**************************************************************************
 * expsum.hpp
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

#include "rsrepair/poly.hpp"
#include "rsrepair/scheme.hpp"
#include "rsrepair/subspace.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace rsrepair {

/**
 * An exact sum of p-th roots of unity, sum_c counts[c] * zeta_p^c.
 *
 * Since 1 + zeta + ... + zeta^(p-1) = 0, adding the same amount to every
 * count leaves the value unchanged; canonical() subtracts the minimum. The
 * value is a rational integer exactly when all counts at nonzero residues
 * agree.
 */
class CharSum {
public:
    explicit CharSum(unsigned p) : counts_(p, 0) { }

    unsigned p() const noexcept { return static_cast<unsigned>(counts_.size()); }
    const std::vector<std::int64_t>& counts() const noexcept { return counts_; }

    void add_residue(unsigned c, std::int64_t times = 1) { counts_[c] += times; }
    CharSum& operator+=(const CharSum& other);

    CharSum canonical() const;
    bool is_rational_integer() const noexcept;
    /// The integer value, if the sum is one.
    std::optional<std::int64_t> integer_value() const noexcept;
    /// Complex absolute value (the only floating-point path).
    double magnitude() const noexcept;

    friend bool operator==(const CharSum& x, const CharSum& y) { return x.canonical().counts_ == y.canonical().counts_; }

private:
    std::vector<std::int64_t> counts_;
};

/// sum of chi(x) = zeta_p^(absolute trace of x) over the values.
CharSum char_sum(const FieldTower& f, std::span<const Element> values);

/**
 * sum_{x in G} chi(scale x). Computed by direct summation and by testing
 * whether scale*G lies in the trace kernel (|G| if so, else 0); throws
 * Internal if the two disagree.
 */
std::int64_t subspace_char_sum(const Subspace& g, Element scale);

/**
 * I/O cost of a normalized scheme as
 * (n-1)ell - q^(-m) sum_{s in T} sum_{u in B^m} sum_{alpha in A} chi(g_u(alpha) beta_s),
 * with exact integer arithmetic. Throws NonIntegerSum if the triple sum is
 * not an integer multiple of q^m.
 */
std::uint64_t io_cost_expsum(const NormalForm& nf);

struct WeilResult {
    double magnitude = 0;
    double bound = 0;
    bool pass = false;
};

/// |sum_{alpha in F} chi(f(alpha))| against (deg f - 1) q^(ell/2).
/// Throws DegreeSharesCharacteristic when p divides deg f (or deg f < 1).
WeilResult weil_check(const FieldTower& f, const Polynomial& poly);

} // namespace rsrepair
