/**************************************************************************
 * basis.cpp
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

#include "rsrepair/basis.hpp"

#include "rsrepair/error.hpp"
#include "rsrepair/linalg.hpp"

namespace rsrepair {

BasisPair BasisPair::dual_basis(const FieldTower& f, std::vector<Element> beta)
{
    const std::size_t ell = f.ell();
    if (beta.size() != ell)
        throw Error(ErrorCode::DependentBasis, "a basis of F over B needs exactly ell elements");
    const TowerField k(f);
    Matrix gram(ell, ell);
    for (std::size_t i = 0; i < ell; ++i)
        for (std::size_t j = 0; j < ell; ++j)
            gram(i, j) = f.trace(f.mul(beta[i], beta[j]));
    auto inv = inverse(gram, k);
    if (!inv)
        throw Error(ErrorCode::DependentBasis, "elements are linearly dependent over B");
    std::vector<Element> gamma(ell, Element{0});
    for (std::size_t i = 0; i < ell; ++i)
        for (std::size_t l = 0; l < ell; ++l)
            gamma[i] = f.add(gamma[i], f.mul((*inv)(i, l), beta[l]));
    return BasisPair(f, std::move(beta), std::move(gamma));
}

std::vector<Element> BasisPair::vectorize(Element alpha) const
{
    std::vector<Element> out(gamma_.size());
    for (std::size_t i = 0; i < gamma_.size(); ++i)
        out[i] = f_.trace(f_.mul(alpha, gamma_[i]));
    return out;
}

std::vector<Element> BasisPair::dual_vectorize(Element theta) const
{
    std::vector<Element> out(beta_.size());
    for (std::size_t i = 0; i < beta_.size(); ++i)
        out[i] = f_.trace(f_.mul(theta, beta_[i]));
    return out;
}

Element BasisPair::devectorize(std::span<const Element> v) const
{
    if (v.size() != beta_.size())
        throw Error(ErrorCode::ParamViolation, "devectorize: wrong length");
    Element acc{0};
    for (std::size_t i = 0; i < v.size(); ++i)
        acc = f_.add(acc, f_.mul(v[i], beta_[i]));
    return acc;
}

} // namespace rsrepair
