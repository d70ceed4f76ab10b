/**************************************************************************
 * poly.cpp
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

#include "rsrepair/poly.hpp"

#include "rsrepair/error.hpp"

namespace rsrepair {

Polynomial linear_combination(const FieldTower& f, std::span<const Element> scalars,
                              std::span<const Polynomial> polys)
{
    if (scalars.size() != polys.size())
        throw Error(ErrorCode::ParamViolation, "linear_combination: size mismatch");
    std::size_t len = 0;
    for (const auto& g : polys)
        len = std::max(len, g.coeffs().size());
    std::vector<Element> out(len, Element{0});
    for (std::size_t j = 0; j < polys.size(); ++j) {
        if (scalars[j].is_zero())
            continue;
        const auto& c = polys[j].coeffs();
        for (std::size_t i = 0; i < c.size(); ++i)
            out[i] = f.add(out[i], f.mul(scalars[j], c[i]));
    }
    return Polynomial(std::move(out));
}

Polynomial QPolynomial::to_polynomial(const FieldTower& f) const
{
    if (theta_.empty())
        return Polynomial();
    std::uint64_t top = 1;
    for (std::size_t j = 1; j < theta_.size(); ++j)
        top *= f.q();
    std::vector<Element> c(top + 1, Element{0});
    std::uint64_t d = 1;
    for (std::size_t j = 0; j < theta_.size(); ++j) {
        c[d] = theta_[j];
        d *= f.q();
    }
    return Polynomial(std::move(c));
}

} // namespace rsrepair
