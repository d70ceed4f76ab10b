/**************************************************************************
 * constructions.cpp
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

#include "rsrepair/constructions.hpp"

#include "rsrepair/error.hpp"
#include "rsrepair/linalg.hpp"

#include <string>

namespace rsrepair {

std::vector<unsigned> conway_polynomial_gf2(unsigned ell)
{
    // Exponents of the nonzero terms below the leading one.
    static const std::vector<std::pair<unsigned, std::vector<unsigned>>> table{
        {4, {1, 0}},
        {6, {4, 3, 1, 0}},
        {8, {4, 3, 2, 0}},
        {10, {6, 5, 3, 2, 1, 0}},
        {12, {7, 6, 5, 3, 1, 0}},
        {14, {7, 5, 3, 0}},
    };
    for (const auto& [deg, terms] : table) {
        if (deg != ell)
            continue;
        std::vector<unsigned> c(ell + 1, 0);
        c[ell] = 1;
        for (unsigned e : terms)
            c[e] = 1;
        return c;
    }
    return {};
}

QPolynomial qpoly_annihilator(const FieldTower& f, std::span<const Element> betas)
{
    const std::size_t t = betas.size();
    if (t == 0)
        return QPolynomial({f.one()});
    if (t >= f.ell())
        throw Error(ErrorCode::ParamViolation, "an annihilator needs fewer than ell elements");
    if (rank_over_subfield(f, betas) != t)
        throw Error(ErrorCode::DependentBetas, "the elements are dependent over B");
    const TowerField k(f);
    Matrix moore(t, t + 1);
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j <= t; ++j)
            moore(i, j) = f.frobenius(betas[i], static_cast<long long>(j));
    const Matrix ker = right_kernel(moore, k);
    for (std::size_t v = 0; v < ker.rows(); ++v) {
        if (ker(v, 0).is_zero())
            continue;
        const Element scale = f.inv(ker(v, 0));
        std::vector<Element> theta(t + 1);
        for (std::size_t j = 0; j <= t; ++j)
            theta[t - j] = f.frobenius(f.mul(scale, ker(v, j)), -static_cast<long long>(j));
        return QPolynomial(std::move(theta));
    }
    throw Error(ErrorCode::NoSolution, "the Moore system has no solution with theta_t != 0");
}

std::optional<ThetaStrategy> parse_theta_strategy(std::string_view s) noexcept
{
    if (s == "paper")
        return ThetaStrategy::WorkedExample;
    if (s == "search")
        return ThetaStrategy::Search;
    if (s == "conway")
        return ThetaStrategy::Conway;
    return std::nullopt;
}

std::string_view to_string(ThetaStrategy s) noexcept
{
    switch (s) {
    case ThetaStrategy::WorkedExample: return "paper";
    case ThetaStrategy::Search: return "search";
    case ThetaStrategy::Conway: return "conway";
    }
    return "?";
}

namespace {

Element cube_root_of_unity(const FieldTower& f)
{
    return f.exp((static_cast<std::uint64_t>(f.size()) - 1) / 3);
}

bool independent(const FieldTower& f, std::span<const Element> xs)
{
    return rank_over_subfield(f, xs) == xs.size();
}

std::vector<Element> c1_leading_betas(const FieldTower& f, Element zeta, Element theta)
{
    const Element one = f.one();
    const Element t2 = f.mul(theta, theta);
    const Element b1 = f.add(f.add(t2, f.mul(f.add(zeta, one), theta)), one);
    const Element b2 = f.mul(zeta, theta);
    const Element b4 = f.add(theta, one);
    return {f.mul(b1, b1), f.mul(b2, b2), one, f.mul(b4, b4)};
}

std::vector<Element> greedy_extension(const FieldTower& f, std::vector<Element> start)
{
    Subspace span = Subspace::span(f, start);
    for (std::uint32_t v = 1; v < f.size() && start.size() < f.ell(); ++v) {
        const Element x{v};
        if (!span.contains(x)) {
            start.push_back(x);
            span = Subspace::span(f, start);
        }
    }
    return start;
}

} // namespace

Construction1 construction1_with(const FieldTower& f, Element theta, std::span<const Element> extension)
{
    if (f.p() != 2 || f.a() != 1 || f.ell() % 2 != 0 || f.ell() < 4)
        throw Error(ErrorCode::ParamViolation, "construction 1 needs q = 2, even ell >= 4");
    const Element zeta = cube_root_of_unity(f);
    std::vector<Element> beta = c1_leading_betas(f, zeta, theta);
    if (!independent(f, beta))
        throw Error(ErrorCode::NoSuitableTheta, "beta_1..beta_4 are dependent for this theta");
    beta.insert(beta.end(), extension.begin(), extension.end());
    const BasisPair bp = BasisPair::dual_basis(f, beta);
    const auto& g = bp.gamma();

    const std::vector<Element> eta{f.one(), zeta, f.mul(zeta, theta), theta};
    std::vector<Element> lambda(4);
    for (std::size_t j = 0; j < 4; ++j)
        lambda[j] = f.mul(f.mul(eta[j], eta[j]), j < 2 ? beta[0] : beta[1]);
    const std::vector<Element> omega{g[2], f.add(g[1], g[3]), f.add(g[0], g[2]), g[3]};

    std::vector<Polynomial> polys;
    for (std::size_t j = 0; j < 4; ++j)
        polys.emplace_back(std::vector<Element>{omega[j], eta[j], lambda[j]});
    for (std::size_t j = 4; j < f.ell(); ++j)
        polys.push_back(Polynomial::constant(g[j]));

    RSCode code(Subspace::whole(f), f.size() - 3);
    return Construction1{RepairScheme(std::move(code), bp, std::move(polys), 0), zeta, theta, lambda, eta, omega};
}

Construction1 construction1(unsigned ell, ThetaStrategy strategy, std::optional<Element> theta_override)
{
    if (ell < 4 || ell % 2 != 0)
        throw Error(ErrorCode::ParamViolation, "construction 1 needs even ell >= 4");
    const auto conway = conway_polynomial_gf2(ell);
    if (strategy == ThetaStrategy::Conway && conway.empty())
        throw Error(ErrorCode::ParamViolation, "no bundled Conway polynomial for ell=" + std::to_string(ell));
    const FieldTower f = strategy == ThetaStrategy::Conway ? FieldTower::with_modulus(2, 1, ell, conway)
                                                           : FieldTower::create(2, 1, ell);
    const Element zeta = cube_root_of_unity(f);

    std::optional<Element> theta = theta_override;
    if (!theta && strategy == ThetaStrategy::Conway) {
        theta = Element{2};
        if (f.order(*theta) != f.size() - 1)
            throw Error(ErrorCode::NoSuitableTheta, "x is not primitive modulo the Conway polynomial");
    }
    if (!theta && strategy == ThetaStrategy::WorkedExample) {
        if (ell != 4)
            throw Error(ErrorCode::ParamViolation, "theta as a root of x^2 + x + zeta is defined for ell = 4 only");
        for (std::uint32_t v = 0; v < f.size() && !theta; ++v) {
            const Element x{v};
            if (f.add(f.add(f.mul(x, x), x), zeta).is_zero())
                theta = x;
        }
    }
    if (!theta) {
        const std::uint64_t order = f.size() - 1;
        for (std::uint32_t v = 2; v < f.size() && !theta; ++v) {
            const Element x{v};
            if (f.order(x) == order && independent(f, c1_leading_betas(f, zeta, x)))
                theta = x;
        }
    }
    if (!theta)
        throw Error(ErrorCode::NoSuitableTheta, "no primitive theta makes beta_1..beta_4 independent");
    const auto lead = c1_leading_betas(f, zeta, *theta);
    if (!independent(f, lead))
        throw Error(ErrorCode::NoSuitableTheta, "beta_1..beta_4 are dependent for this theta");
    const auto full = greedy_extension(f, lead);
    return construction1_with(f, *theta, std::span<const Element>(full).subspan(4));
}

namespace {

std::pair<unsigned, unsigned> split_prime_power(unsigned q)
{
    unsigned p = 2;
    while (p <= q && q % p)
        ++p;
    if (p > q || q < 2)
        throw Error(ErrorCode::ParamViolation, "q must be a prime power");
    unsigned a = 0;
    unsigned rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++a;
    }
    if (rest != 1)
        throw Error(ErrorCode::ParamViolation, "q must be a prime power");
    return {p, a};
}

} // namespace

Construction2 construction2(const Construction2Params& prm)
{
    const auto [p, a] = split_prime_power(prm.q);
    const unsigned ell = prm.ell, d = prm.d, s = prm.s, m = prm.m;
    auto violation = [](const std::string& what) { return Error(ErrorCode::ParamViolation, what); };
    if (d < 1 || d > ell)
        throw violation("need 1 <= d <= ell");
    if (m < 1 || ell % m != 0)
        throw violation("need m | ell");
    if (m + d > ell + s + 1)
        throw violation("need m <= ell - d + s + 1");
    if (s >= d)
        throw violation("need s < d");
    if (s > 0 && d == ell)
        throw violation("s > 0 needs d < ell");
    std::uint64_t qs = 1, n = 1;
    for (unsigned i = 0; i < s; ++i)
        qs *= prm.q;
    for (unsigned i = 0; i < d; ++i)
        n *= prm.q;
    if (prm.r < qs + 1)
        throw violation("need r >= q^s + 1");
    if (prm.r >= n)
        throw violation("need r < n = q^d");

    const FieldTower f = FieldTower::create(p, a, ell);

    // gamma_1..gamma_m: basis of GF(q^m) over B, starting at 1.
    std::vector<Element> sub{f.one()};
    {
        Subspace span = Subspace::span(f, sub);
        for (std::uint32_t v = 2; v < f.size() && sub.size() < m; ++v) {
            const Element x{v};
            if (f.frobenius(x, m) == x && !span.contains(x)) {
                sub.push_back(x);
                span = Subspace::span(f, sub);
            }
        }
        if (sub.size() != m)
            throw Error(ErrorCode::Internal, "subfield basis not found");
    }
    // lambda_1 = 1, ...: basis of F over GF(q^m).
    std::vector<Element> gamma(sub);
    {
        Subspace span = Subspace::span(f, gamma);
        for (std::uint32_t v = 2; v < f.size() && gamma.size() < ell; ++v) {
            const Element x{v};
            if (span.contains(x))
                continue;
            for (Element g : sub)
                gamma.push_back(f.mul(x, g));
            span = Subspace::span(f, gamma);
        }
        if (gamma.size() != ell)
            throw Error(ErrorCode::Internal, "extension basis not found");
    }
    const BasisPair bp = BasisPair::dual_basis(f, gamma).swapped();
    const auto& beta = bp.beta();

    QPolynomial l({f.one()});
    if (s > 0)
        l = qpoly_annihilator(f, std::span<const Element>(beta).subspan(1, s));

    std::vector<Subspace> kernels;
    for (unsigned i = 2; i <= ell - d + s + 1; ++i)
        kernels.push_back(scaled_trace_kernel(f, beta[i - 1]));
    const Subspace w = kernels.empty() ? Subspace::whole(f) : intersect(kernels);
    const Subspace a_set = preimage(l, w);
    if (a_set.dim() != d)
        throw Error(ErrorCode::Internal, "evaluation set has the wrong dimension");

    const Polynomial lp = l.to_polynomial(f);
    std::vector<Polynomial> polys;
    for (unsigned j = 0; j < ell; ++j) {
        if (j < m) {
            std::vector<Element> c(lp.coeffs().size());
            for (std::size_t e = 0; e < c.size(); ++e)
                c[e] = f.mul(gamma[j], lp.coeffs()[e]);
            c[0] = f.add(c[0], gamma[j]);
            polys.emplace_back(std::move(c));
        } else {
            polys.push_back(Polynomial::constant(gamma[j]));
        }
    }
    RSCode code(a_set, n - prm.r);
    return Construction2{RepairScheme(std::move(code), bp, std::move(polys), 0), l, w};
}

} // namespace rsrepair
