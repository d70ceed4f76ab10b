/**************************************************************************
 * rs.cpp
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

#include "rsrepair/rs.hpp"

#include "rsrepair/error.hpp"

#include <string>

namespace rsrepair {

Element random_element(const FieldTower& f, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::uint32_t> dist(0, f.size() - 1);
    return Element{dist(rng)};
}

RSCode::RSCode(Subspace evaluation_set, std::size_t k) : a_(std::move(evaluation_set)), points_(a_.enumerate()), k_(k)
{
    if (k_ < 1 || k_ >= points_.size())
        throw Error(ErrorCode::ParamViolation,
                    "RS dimension k=" + std::to_string(k_) + " must satisfy 1 <= k < n=" + std::to_string(points_.size()));
}

std::vector<Element> RSCode::encode(const Polynomial& message) const
{
    if (message.degree() >= static_cast<int>(k_))
        throw Error(ErrorCode::DegreeTooHigh, "message degree " + std::to_string(message.degree()) +
                                                  " exceeds k-1=" + std::to_string(k_ - 1));
    std::vector<Element> out;
    out.reserve(points_.size());
    for (Element x : points_)
        out.push_back(message.eval(tower(), x));
    return out;
}

Polynomial RSCode::random_message(std::mt19937_64& rng) const
{
    std::vector<Element> c(k_);
    for (auto& e : c)
        e = random_element(tower(), rng);
    return Polynomial(std::move(c));
}

std::vector<Element> RSCode::random_codeword(std::uint64_t seed) const
{
    std::mt19937_64 rng(seed);
    return encode(random_message(rng));
}

DualCheckReport dual_inner_product_check(const RSCode& code, const BasisPair& bp, std::size_t trials,
                                         std::uint64_t seed)
{
    const FieldTower& f = code.tower();
    const RSCode dual = code.dual();
    std::mt19937_64 rng(seed);
    DualCheckReport rep;
    rep.trials = trials;
    for (std::size_t t = 0; t < trials; ++t) {
        const auto c = code.encode(code.random_message(rng));
        const auto g = dual.encode(dual.random_message(rng));
        Element scalar{0};
        Element vec{0};
        for (std::size_t j = 0; j < c.size(); ++j) {
            scalar = f.add(scalar, f.mul(g[j], c[j]));
            const auto gv = bp.dual_vectorize(g[j]);
            const auto cv = bp.vectorize(c[j]);
            for (std::size_t i = 0; i < gv.size(); ++i)
                vec = f.add(vec, f.mul(gv[i], cv[i]));
        }
        const bool scalar_ok = scalar.is_zero();
        const bool vec_ok = vec.is_zero();
        rep.scalar_failures += !scalar_ok;
        rep.vector_failures += !vec_ok;
        rep.disagreements += scalar_ok != vec_ok;
    }
    return rep;
}

} // namespace rsrepair
