/**************************************************************************
 * gf.hpp
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

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace rsrepair {

/**
 * An element of F = GF(p^(a*ell)).
 *
 * The packed value is the coordinate vector in the polynomial basis of the
 * modulus, read as a base-p integer with the constant coefficient as the
 * least significant digit. An Element carries no reference to its field; all
 * arithmetic goes through FieldTower.
 */
class Element {
public:
    constexpr Element() = default;
    constexpr explicit Element(std::uint32_t packed) : v_(packed) { }

    constexpr std::uint32_t value() const noexcept { return v_; }
    constexpr bool is_zero() const noexcept { return v_ == 0; }

    friend constexpr auto operator<=>(Element, Element) = default;

private:
    std::uint32_t v_ = 0;
};

/// Largest supported log2(q^ell); read from RSREPAIR_MAX_FIELD_BITS, default 20.
unsigned max_field_bits();

/**
 * The tower B = GF(q) <= F = GF(q^ell) with q = p^a.
 *
 * Construction builds exp/log tables for a primitive element and full trace
 * tables, so every operation below is a table lookup or a digit loop. The
 * object is immutable and cheap to copy (shared tables), and safe to use
 * from several threads at once.
 */
class FieldTower {
public:
    /**
     * Deterministic construction: the modulus is the smallest monic
     * irreducible polynomial of degree a*ell when coefficient vectors are
     * read as base-p integers (constant term least significant).
     */
    static FieldTower create(unsigned p, unsigned a, unsigned ell);

    /// Rebuild a tower from a serialized modulus (low-to-high, monic).
    static FieldTower with_modulus(unsigned p, unsigned a, unsigned ell,
                                   std::vector<unsigned> modulus);

    unsigned p() const noexcept;
    unsigned a() const noexcept;
    unsigned ell() const noexcept;
    unsigned degree() const noexcept; ///< a*ell, dimension of F over GF(p)
    std::uint32_t q() const noexcept;
    std::uint32_t size() const noexcept; ///< q^ell
    const std::vector<unsigned>& modulus() const noexcept;

    /// Generator of B*; absent when q = p.
    std::optional<Element> subfield_generator() const noexcept;
    /// Smallest primitive element of F (by packed value).
    Element primitive() const noexcept;

    Element zero() const noexcept { return Element{0}; }
    Element one() const noexcept { return Element{1}; }
    /// Embedding of the residue c in GF(p).
    Element from_int(unsigned c) const;

    Element add(Element x, Element y) const noexcept;
    Element sub(Element x, Element y) const noexcept;
    Element neg(Element x) const noexcept;
    Element mul(Element x, Element y) const noexcept;
    Element inv(Element x) const;
    Element div(Element x, Element y) const;
    Element pow(Element x, std::uint64_t e) const noexcept;

    /// x^(q^k); k may be negative (inverse Frobenius).
    Element frobenius(Element x, long long k) const noexcept;
    /// Tr_{F/B}(x), an element of the embedded subfield B.
    Element trace(Element x) const noexcept;
    /// Tr_{F/GF(p)}(x) as a residue in [0, p).
    unsigned absolute_trace(Element x) const noexcept;

    /// Discrete log base primitive(); x must be nonzero.
    std::uint32_t log(Element x) const;
    Element exp(std::uint64_t e) const noexcept;
    std::uint64_t order(Element x) const;

    bool in_subfield(Element x) const noexcept;
    /// Elements of B in enumeration order: 0 first, then residues (q = p) or
    /// powers of subfield_generator (q > p).
    const std::vector<Element>& subfield_elements() const noexcept;
    std::size_t subfield_index(Element x) const;

    std::vector<unsigned> coords(Element x) const;
    Element from_coords(std::span<const unsigned> coords) const;
    bool contains(Element x) const noexcept { return x.value() < size(); }

    friend bool operator==(const FieldTower& x, const FieldTower& y) noexcept;

private:
    struct Tables;
    explicit FieldTower(std::shared_ptr<const Tables> t) : t_(std::move(t)) { }
    std::shared_ptr<const Tables> t_;
};

} // namespace rsrepair
