/**************************************************************************
 * basis.hpp
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

#include <span>
#include <vector>

namespace rsrepair {

/**
 * A basis beta of F over B together with its trace-dual basis gamma,
 * Tr(gamma_i * beta_j) = [i == j].
 *
 * vectorize() is the coordinate map alpha -> (Tr(alpha gamma_i))_i with
 * respect to beta; dual_vectorize() is the same map for the dual basis,
 * theta -> (Tr(theta beta_i))_i. Rows of repair matrices use the latter.
 */
class BasisPair {
public:
    /// Computes gamma by inverting the trace Gram matrix of beta over B.
    /// Throws DependentBasis when beta is not a basis.
    static BasisPair dual_basis(const FieldTower& f, std::vector<Element> beta);

    const FieldTower& tower() const noexcept { return f_; }
    std::size_t size() const noexcept { return beta_.size(); }
    const std::vector<Element>& beta() const noexcept { return beta_; }
    const std::vector<Element>& gamma() const noexcept { return gamma_; }

    std::vector<Element> vectorize(Element alpha) const;
    std::vector<Element> dual_vectorize(Element theta) const;
    Element devectorize(std::span<const Element> v) const;

    /// The same pair with the roles of beta and gamma exchanged.
    BasisPair swapped() const { return BasisPair(f_, gamma_, beta_); }

    friend bool operator==(const BasisPair& x, const BasisPair& y) noexcept
    {
        return x.f_ == y.f_ && x.beta_ == y.beta_ && x.gamma_ == y.gamma_;
    }

private:
    BasisPair(FieldTower f, std::vector<Element> beta, std::vector<Element> gamma)
        : f_(std::move(f)), beta_(std::move(beta)), gamma_(std::move(gamma))
    { }

    FieldTower f_;
    std::vector<Element> beta_;
    std::vector<Element> gamma_;
};

} // namespace rsrepair
