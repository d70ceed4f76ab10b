/**************************************************************************
 * subspace.hpp
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

#include "rsrepair/gf.hpp"
#include "rsrepair/linalg.hpp"
#include "rsrepair/poly.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace rsrepair {

/// Default cap on the number of elements enumerate() will produce.
inline constexpr std::uint64_t kEnumerationBudget = std::uint64_t{1} << 20;

/**
 * A B-linear subspace of F.
 *
 * Stored as a reduced row echelon basis over the prime field GF(p) (rows of
 * length a*ell); B-linearity is kept by closing every spanning set under
 * multiplication with the powers of the subfield generator. The B-basis
 * reported by basis() is the greedy B-independent subset of the GF(p) rows,
 * so it depends only on the subspace, not on how it was spanned.
 */
class Subspace {
public:
    static Subspace zero(const FieldTower& f);
    static Subspace whole(const FieldTower& f);
    static Subspace span(const FieldTower& f, std::span<const Element> vectors);
    /// Kernel of a GF(p)-linear map F -> F; B-linear maps give B-subspaces.
    static Subspace kernel(const FieldTower& f, const std::function<Element(Element)>& map);

    const FieldTower& tower() const noexcept { return f_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    std::size_t prime_dim() const noexcept { return rows_.size(); }
    std::uint64_t size() const noexcept;

    /// Canonical B-basis.
    const std::vector<Element>& basis() const noexcept { return basis_; }
    /// Reduced echelon basis over GF(p).
    const std::vector<Element>& prime_basis() const noexcept { return rows_; }

    bool contains(Element x) const noexcept { return residual(x).is_zero(); }
    /// x reduced against the echelon basis; zero iff x is in the subspace.
    Element residual(Element x) const noexcept;

    /**
     * All q^dim elements. Coefficient vectors over B run in lexicographic
     * order (first basis vector most significant, B in its enumeration
     * order), so the first element is always 0. Throws TooLarge beyond the
     * budget.
     */
    std::vector<Element> enumerate(std::uint64_t budget = kEnumerationBudget) const;

    bool is_subspace_of(const Subspace& other) const noexcept;

    friend bool operator==(const Subspace& x, const Subspace& y) noexcept
    {
        return x.f_ == y.f_ && x.rows_ == y.rows_;
    }

private:
    Subspace(FieldTower f, std::vector<Element> rows, std::vector<unsigned> pivots);
    static Subspace from_prime_span(const FieldTower& f, std::span<const Element> vectors);

    FieldTower f_;
    std::vector<Element> rows_;     // GF(p) echelon rows, packed
    std::vector<unsigned> pivots_;  // pivot digit of each row
    std::vector<Element> basis_;    // canonical B-basis
};

Subspace sum(const Subspace& x, const Subspace& y);
/// Intersection of a nonempty list; AmbientMismatch for different towers.
Subspace intersect(std::span<const Subspace> spaces);
Subspace intersect(const Subspace& x, const Subspace& y);

/// K = Ker(Tr_{F/B}).
Subspace trace_kernel(const FieldTower& f);
/// {x : Tr_{F/B}(beta x) = 0}; throws ZeroScalar for beta = 0.
Subspace scaled_trace_kernel(const FieldTower& f, Element beta);

/// The image of a B-linear map on F.
Subspace image(const FieldTower& f, const std::function<Element(Element)>& map);

/**
 * {x : L(x) in W} for a B-linear L. Throws WNotInImage unless W lies in the
 * image of L, i.e. unless dim = dim W + dim Ker L.
 */
Subspace preimage(const std::function<Element(Element)>& map, const Subspace& w);
Subspace preimage(const QPolynomial& map, const Subspace& w);

/// Rank over B of a set of elements of F.
std::size_t rank_over_subfield(const FieldTower& f, std::span<const Element> xs);

/**
 * A subspace of B^m, held as a reduced row echelon basis over B. Vector
 * entries are elements of B embedded in F.
 */
class VecSubspace {
public:
    VecSubspace(const FieldTower& f, std::size_t m);
    static VecSubspace span(const FieldTower& f, std::size_t m, const Matrix& rows);

    std::size_t ambient_dim() const noexcept { return m_; }
    std::size_t dim() const noexcept { return basis_.rows(); }
    const Matrix& basis() const noexcept { return basis_; }
    bool contains(std::span<const Element> v) const;

    friend bool operator==(const VecSubspace& x, const VecSubspace& y) noexcept
    {
        return x.m_ == y.m_ && x.basis_ == y.basis_;
    }

    friend VecSubspace intersect(const VecSubspace& x, const VecSubspace& y);
    friend VecSubspace sum(const VecSubspace& x, const VecSubspace& y);

private:
    FieldTower f_;
    std::size_t m_;
    Matrix basis_;
};

} // namespace rsrepair
