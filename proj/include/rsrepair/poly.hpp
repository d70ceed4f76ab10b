/**************************************************************************
 * poly.hpp
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

/// Polynomial over F, coefficients low to high. Trailing zeros are allowed.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Element> coeffs) : coeffs_(std::move(coeffs)) { }

    static Polynomial constant(Element c) { return Polynomial({c}); }

    const std::vector<Element>& coeffs() const noexcept { return coeffs_; }
    std::vector<Element>& coeffs() noexcept { return coeffs_; }

    /// -1 for the zero polynomial.
    int degree() const noexcept
    {
        for (std::size_t i = coeffs_.size(); i > 0; --i)
            if (!coeffs_[i - 1].is_zero())
                return static_cast<int>(i - 1);
        return -1;
    }

    Element coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : Element{0}; }

    Element eval(const FieldTower& f, Element x) const noexcept
    {
        Element acc{0};
        for (std::size_t i = coeffs_.size(); i > 0; --i)
            acc = f.add(f.mul(acc, x), coeffs_[i - 1]);
        return acc;
    }

    bool is_constant() const noexcept { return degree() <= 0; }

    friend bool operator==(const Polynomial& x, const Polynomial& y) noexcept
    {
        const std::size_t n = std::max(x.coeffs_.size(), y.coeffs_.size());
        for (std::size_t i = 0; i < n; ++i)
            if (x.coeff(i) != y.coeff(i))
                return false;
        return true;
    }

private:
    std::vector<Element> coeffs_;
};

/// sum_j scalars[j] * polys[j]
Polynomial linear_combination(const FieldTower& f, std::span<const Element> scalars,
                              std::span<const Polynomial> polys);

/**
 * Linearized polynomial L(x) = sum_j theta_j x^(q^j). It is a B-linear map
 * on F; as an ordinary polynomial it has degree q^t.
 */
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<Element> theta) : theta_(std::move(theta)) { }

    const std::vector<Element>& theta() const noexcept { return theta_; }
    std::size_t q_degree() const noexcept { return theta_.empty() ? 0 : theta_.size() - 1; }

    Element eval(const FieldTower& f, Element x) const noexcept
    {
        Element acc{0};
        Element xp = x;
        for (std::size_t j = 0; j < theta_.size(); ++j) {
            acc = f.add(acc, f.mul(theta_[j], xp));
            xp = f.frobenius(xp, 1);
        }
        return acc;
    }

    /// Expansion as an ordinary polynomial of degree q^t.
    Polynomial to_polynomial(const FieldTower& f) const;

private:
    std::vector<Element> theta_;
};

} // namespace rsrepair
