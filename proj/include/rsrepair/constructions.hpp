/**************************************************************************
 * constructions.hpp
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
#include "rsrepair/scheme.hpp"
#include "rsrepair/subspace.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace rsrepair {

/**
 * The q-polynomial L(x) = sum_{j<=t} theta_j x^(q^j), theta_t = 1, whose
 * image is the intersection of the scaled trace kernels beta_i^(-1) K.
 *
 * The coefficients come from a kernel vector y of the t x (t+1) Moore
 * matrix (beta_i^(q^j)), read as y_j = theta_{t-j}^(q^j). Throws
 * DependentBetas when the betas are dependent over B, ParamViolation when
 * t >= ell.
 */
/// Conway polynomial of degree ell over GF(2), low-to-high; empty if not bundled.
std::vector<unsigned> conway_polynomial_gf2(unsigned ell);

QPolynomial qpoly_annihilator(const FieldTower& f, std::span<const Element> betas);

enum class ThetaStrategy { WorkedExample, Search, Conway };

std::optional<ThetaStrategy> parse_theta_strategy(std::string_view s) noexcept;
std::string_view to_string(ThetaStrategy s) noexcept;

struct Construction1 {
    RepairScheme scheme;
    Element zeta;  ///< primitive cube root of unity
    Element theta; ///< the primitive element used for beta_1..beta_4
    std::vector<Element> lambda, eta, omega;
};

/**
 * Full-length RS(F, 2^ell - 3) over F = GF(2^ell) with a (4,4)-normalized
 * repair scheme for the node at 0:
 *   beta_1..beta_4 = (theta^2+(zeta+1)theta+1)^2, (zeta theta)^2, 1, (theta+1)^2,
 *   g_j = lambda_j x^2 + eta_j x + omega_j (j <= 4), g_j = gamma_j (j > 4),
 * with eta = (1, zeta, zeta theta, theta), lambda_j = eta_j^2 beta_1 for
 * j = 1, 2 and eta_j^2 beta_2 for j = 3, 4, and
 * omega = (gamma_3, gamma_2+gamma_4, gamma_1+gamma_3, gamma_4).
 *
 * WorkedExample (ell = 4 only) takes theta as the smallest root of
 * x^2 + x + zeta; Search takes the first primitive element in value order
 * with beta_1..beta_4 independent. Conway builds F on the Conway
 * polynomial of degree ell (bundled for ell = 4..14) and takes theta = x.
 * The basis is extended greedily over field elements in value order.
 * `theta_override` replaces the strategy's choice of theta.
 */
Construction1 construction1(unsigned ell, ThetaStrategy strategy,
                            std::optional<Element> theta_override = std::nullopt);

/// Construction 1 with an explicit theta and explicit extra basis elements
/// (beta_5..beta_ell); used by the search over extension choices.
Construction1 construction1_with(const FieldTower& f, Element theta, std::span<const Element> extension);

struct Construction2Params {
    unsigned q = 2;
    unsigned ell = 4;
    unsigned d = 3;
    unsigned s = 0;
    unsigned m = 2;
    unsigned r = 2;
};

struct Construction2 {
    RepairScheme scheme;
    QPolynomial l;  ///< L(x); x itself when s = 0
    Subspace w;     ///< L(A)
};

/**
 * RS(A, q^d - r) with dim A = d inside F = GF(q^ell):
 *   gamma_{(i-1)m+j} = lambda_i gamma_j from greedy bases of GF(q^m)/B and
 *   F/GF(q^m) (gamma_1 = lambda_1 = 1), beta = dual of gamma,
 *   L = x (s = 0) or the annihilator of beta_2..beta_{s+1},
 *   W = intersection of beta_i^(-1) K for i in [2, ell-d+s+1], A = L^(-1)(W),
 *   g_j = gamma_j L(x) + gamma_j for j <= m, g_j = gamma_j otherwise.
 * Throws ParamViolation naming the violated condition.
 */
Construction2 construction2(const Construction2Params& p);

} // namespace rsrepair
