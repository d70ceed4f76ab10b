/**************************************************************************
 * test_constructions.cpp
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

#include "rsrepair/bounds.hpp"
#include "rsrepair/constructions.hpp"
#include "rsrepair/error.hpp"
#include "rsrepair/expsum.hpp"
#include "rsrepair/verify.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

using namespace rsrepair;

namespace {

Matrix from_rows(std::vector<std::vector<unsigned>> rows)
{
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m(i, j) = Element{rows[i][j]};
    return m;
}

Matrix top_left(const Matrix& w, std::size_t rows, std::size_t cols)
{
    Matrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            out(i, j) = w(i, j);
    return out;
}

} // namespace

TEST(QPoly, TraceMapOfGf4)
{
    const FieldTower f = FieldTower::create(2, 1, 2);
    const Element one = f.one();
    const QPolynomial l = qpoly_annihilator(f, std::span<const Element>(&one, 1));
    EXPECT_EQ(l.theta(), (std::vector<Element>{f.one(), f.one()})); // x + x^2
    std::set<Element> img;
    for (std::uint32_t v = 0; v < 4; ++v)
        img.insert(l.eval(f, Element{v}));
    EXPECT_EQ(img, (std::set<Element>{f.zero(), f.one()}));
    // as an ordinary polynomial
    const Polynomial p = l.to_polynomial(f);
    EXPECT_EQ(p.degree(), 2);
    for (std::uint32_t v = 0; v < 4; ++v)
        EXPECT_EQ(p.eval(f, Element{v}), l.eval(f, Element{v}));
}

TEST(QPoly, EmptySetGivesIdentity)
{
    const FieldTower f = FieldTower::create(3, 1, 3);
    const QPolynomial l = qpoly_annihilator(f, {});
    EXPECT_EQ(l.q_degree(), 0u);
    EXPECT_EQ(image(f, [&](Element x) { return l.eval(f, x); }), Subspace::whole(f));
}

TEST(QPoly, Errors)
{
    const FieldTower f = FieldTower::create(2, 1, 4);
    const std::vector<Element> dep{Element{1}, Element{2}, Element{3}};
    try {
        qpoly_annihilator(f, dep);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DependentBetas);
    }
    const std::vector<Element> full{Element{1}, Element{2}, Element{4}, Element{8}};
    EXPECT_THROW(qpoly_annihilator(f, full), Error);
}

TEST(QPoly, ImageIsKernelIntersectionExhaustive)
{
    const auto rep = run_suite("annihilator", {.seed = 6});
    EXPECT_TRUE(rep.passed()) << (rep.samples.empty() ? "" : rep.samples.front());
}

TEST(Construction1, WorkedExampleBasis)
{
    const auto c = construction1(4, ThetaStrategy::WorkedExample);
    const FieldTower& f = c.scheme.tower();
    const Element th = c.theta;
    // theta^2 + theta + zeta = 0, zeta a primitive cube root of unity
    EXPECT_TRUE(f.add(f.add(f.mul(th, th), th), c.zeta).is_zero());
    EXPECT_EQ(f.pow(c.zeta, 3), f.one());
    EXPECT_NE(c.zeta, f.one());
    EXPECT_EQ(f.order(th), 15u);
    auto pw = [&](unsigned k) { return f.pow(th, k); };
    EXPECT_EQ(c.scheme.basis().beta(), (std::vector<Element>{pw(14), pw(12), pw(0), pw(8)}));
    EXPECT_EQ(c.scheme.basis().gamma(), (std::vector<Element>{pw(8), pw(2), pw(11), pw(5)}));
    // the four polynomials as printed
    const auto& g = c.scheme.polys();
    const auto& gam = c.scheme.basis().gamma();
    EXPECT_EQ(g[0], Polynomial({gam[2], f.one(), pw(14)}));
    EXPECT_EQ(g[1], Polynomial({f.add(gam[1], gam[3]), pw(5), pw(9)}));
    EXPECT_EQ(g[2], Polynomial({f.add(gam[0], gam[2]), pw(6), pw(9)}));
    EXPECT_EQ(g[3], Polynomial({gam[3], pw(1), pw(14)}));
}

TEST(Construction1, WorkedExampleMatrices)
{
    const auto c = construction1(4, ThetaStrategy::WorkedExample);
    const RepairScheme& s = c.scheme;
    const FieldTower& f = s.tower();
    auto hat = [&](unsigned k) { return top_left(s.repair_matrix_at(f.pow(c.theta, k)), 4, 4); };
    EXPECT_EQ(hat(6), from_rows({{0, 1, 1, 1}, {0, 0, 0, 0}, {0, 0, 1, 1}, {1, 0, 0, 1}}));
    EXPECT_EQ(hat(8), from_rows({{0, 1, 1, 0}, {0, 0, 1, 1}, {1, 0, 0, 0}, {1, 0, 1, 1}}));
    EXPECT_EQ(hat(10), from_rows({{0, 1, 1, 0}, {0, 1, 1, 0}, {0, 0, 0, 0}, {1, 0, 1, 0}}));
    // these are the only nodes where rank < nz
    const TowerField k(f);
    std::set<unsigned> deficient;
    for (unsigned e = 0; e < 15; ++e) {
        const Matrix w = hat(e);
        if (rank(w, k) < nonzero_columns(w))
            deficient.insert(e);
    }
    EXPECT_EQ(deficient, (std::set<unsigned>{6, 8, 10}));
    const auto m = metrics_direct(s);
    EXPECT_EQ(m.io_cost, 44u);
    EXPECT_EQ(m.bandwidth, 41u);
    const NormalForm nf = normalize(s);
    EXPECT_EQ(nf.m, 4u);
    EXPECT_EQ(nf.t, 4u);
}

TEST(Construction1, CoefficientRelations)
{
    for (auto [ell, st] : {std::pair{4u, ThetaStrategy::WorkedExample}, {6u, ThetaStrategy::Conway},
                           {8u, ThetaStrategy::Search}, {10u, ThetaStrategy::Conway}}) {
        const auto c = construction1(ell, st);
        const FieldTower& f = c.scheme.tower();
        const auto& b = c.scheme.basis().beta();
        const auto& la = c.lambda;
        const auto& et = c.eta;
        auto sq = [&](Element x) { return f.mul(x, x); };
        auto add = [&](std::initializer_list<Element> xs) {
            Element a = f.zero();
            for (Element x : xs)
                a = f.add(a, x);
            return a;
        };
        const Element th = c.theta, z = c.zeta, th2 = sq(th), th4 = sq(th2);
        EXPECT_EQ(la[0], add({th4, f.mul(z, th2), f.one()}));
        EXPECT_EQ(la[1], add({f.mul(f.add(z, f.one()), th4), th2, sq(z)}));
        EXPECT_EQ(la[2], f.mul(z, th4));
        EXPECT_EQ(la[3], f.mul(sq(z), th4));
        EXPECT_EQ(add({la[0], la[2], la[3]}), f.mul(b[2], sq(add({et[0], et[2], et[3]}))));
        EXPECT_EQ(add({la[1], la[3]}), f.mul(b[2], sq(add({et[1], et[3]}))));
        EXPECT_EQ(add({la[1], la[2], la[3]}), f.mul(b[3], sq(add({et[1], et[2], et[3]}))));
        EXPECT_EQ(add({la[0], la[2]}), f.mul(b[3], sq(add({et[0], et[2]}))));
    }
}

TEST(Construction1, KernelSubspacesByBruteForce)
{
    // U(s) = {u in F_2^4 : lambda_u = beta_s eta_u^2}, encoded as 4-bit masks (bit j = u_{j+1}).
    const std::vector<std::set<unsigned>> expected{
        {0b0000, 0b0001, 0b0010, 0b0011},
        {0b0000, 0b0100, 0b1000, 0b1100},
        {0b0000, 0b1101, 0b1010, 0b0111},
        {0b0000, 0b1110, 0b0101, 0b1011},
    };
    for (unsigned ell : {4u, 6u, 8u}) {
        const auto c = construction1(ell, ell == 4 ? ThetaStrategy::WorkedExample : ThetaStrategy::Conway);
        const FieldTower& f = c.scheme.tower();
        const auto& b = c.scheme.basis().beta();
        for (unsigned s = 0; s < 4; ++s) {
            std::set<unsigned> u_set;
            std::vector<Element> w;
            for (unsigned mask = 0; mask < 16; ++mask) {
                Element lu = f.zero(), eu = f.zero(), ou = f.zero();
                for (unsigned j = 0; j < 4; ++j) {
                    if (mask >> j & 1) {
                        lu = f.add(lu, c.lambda[j]);
                        eu = f.add(eu, c.eta[j]);
                        ou = f.add(ou, c.omega[j]);
                    }
                }
                if (lu == f.mul(b[s], f.mul(eu, eu))) {
                    u_set.insert(mask);
                    w.push_back(ou);
                }
            }
            EXPECT_EQ(u_set, expected[s]) << "ell=" << ell << " s=" << s + 1;
            for (Element x : w)
                EXPECT_TRUE(f.trace(f.mul(b[s], x)).is_zero()) << "ell=" << ell << " s=" << s + 1;
        }
    }
}

TEST(Construction1, IoCostIsOptimal)
{
    for (unsigned ell : {4u, 6u, 8u, 10u}) {
        const std::uint64_t n = std::uint64_t{1} << ell;
        for (auto st : {ThetaStrategy::Search, ThetaStrategy::Conway}) {
            const auto s = construction1(ell, st).scheme;
            const auto m = metrics_direct(s);
            EXPECT_EQ(m.io_cost, (n - 1) * ell - n) << ell;
            EXPECT_EQ(static_cast<std::int64_t>(m.io_cost), io_lower_bound({2, ell, ell, 3}).value);
            EXPECT_GE(static_cast<std::int64_t>(m.bandwidth), bandwidth_lower_bound({2, ell, ell, 3}).value);
            EXPECT_LE(m.bandwidth, m.io_cost);
        }
    }
}

TEST(Construction1, ConwayTableValues)
{
    const std::vector<std::uint64_t> io{44, 314, 1784, 9206}, bw{41, 300, 1733, 9002};
    for (unsigned i = 0; i < 4; ++i) {
        const auto m = metrics_direct(construction1(4 + 2 * i, ThetaStrategy::Conway).scheme);
        EXPECT_EQ(m.io_cost, io[i]);
        EXPECT_EQ(m.bandwidth, bw[i]);
    }
}

TEST(Construction1, ParameterErrors)
{
    EXPECT_THROW(construction1(5, ThetaStrategy::Search), Error);
    EXPECT_THROW(construction1(2, ThetaStrategy::Search), Error);
    EXPECT_THROW(construction1(6, ThetaStrategy::WorkedExample), Error);
    EXPECT_TRUE(conway_polynomial_gf2(16).empty());
}

TEST(Construction2, TableTuples)
{
    struct Row {
        Construction2Params p;
        std::uint64_t io;
    };
    for (const Row& row : std::vector<Row>{{{2, 4, 3, 0, 2, 2}, 20},
                                           {{2, 6, 4, 0, 3, 2}, 66},
                                           {{2, 8, 5, 0, 4, 2}, 184},
                                           {{2, 6, 5, 1, 3, 3}, 138},
                                           {{2, 8, 6, 1, 4, 3}, 376},
                                           {{2, 8, 7, 2, 4, 5}, 760}}) {
        const auto m = metrics_direct(construction2(row.p).scheme);
        EXPECT_EQ(m.io_cost, row.io);
        EXPECT_EQ(m.bandwidth, row.io);
    }
}

TEST(Construction2, DiagonalBlocksAndClosedForm)
{
    for (unsigned q : {2u, 3u, 4u}) {
        for (unsigned ell = 1; ell <= 8; ++ell) {
            if (std::pow(q, ell) > 256)
                continue;
            for (unsigned d = 1; d <= ell; ++d) {
                for (unsigned s = 0; s < d && (s == 0 || d < ell); ++s) {
                    const std::uint64_t n = static_cast<std::uint64_t>(std::pow(q, d));
                    const unsigned r = static_cast<unsigned>(std::pow(q, s)) + 1;
                    if (r >= n)
                        continue;
                    for (unsigned m = 1; m <= ell - d + s + 1 && m <= ell; ++m) {
                        if (ell % m)
                            continue;
                        const Construction2Params p{q, ell, d, s, m, r};
                        const auto c = construction2(p);
                        const RepairScheme& sc = c.scheme;
                        const FieldTower& f = sc.tower();
                        const auto met = metrics_direct(sc);
                        const std::uint64_t expect = (n - 1) * ell - m * n / q;
                        ASSERT_EQ(met.io_cost, expect) << q << " " << ell << " " << d << " " << s << " " << m;
                        ASSERT_EQ(met.bandwidth, met.io_cost);
                        // W lies in L(F), and A = L^(-1)(W) has dimension d
                        ASSERT_TRUE(c.w.is_subspace_of(image(f, [&](Element x) { return c.l.eval(f, x); })));
                        ASSERT_EQ(sc.code().evaluation_set().dim(), d);
                        for (Element alpha : sc.code().points())
                            ASSERT_TRUE(c.w.contains(c.l.eval(f, alpha)));
                        const auto& beta = sc.basis().beta();
                        const auto& gamma = sc.basis().gamma();
                        for (std::size_t i = 0; i < sc.code().n(); ++i) {
                            const Element alpha = sc.code().points()[i];
                            const Matrix w = sc.repair_matrix(i);
                            const Element la = c.l.eval(f, alpha);
                            for (unsigned a = 0; a < m; ++a)
                                for (unsigned b2 = 0; b2 < m; ++b2) {
                                    const Element want =
                                        a == b2 ? f.add(f.trace(f.mul(f.mul(gamma[a], la), beta[a])), f.one())
                                                : f.zero();
                                    ASSERT_EQ(w(a, b2), want);
                                }
                        }
                    }
                }
            }
        }
    }
}

TEST(Construction2, ParameterErrors)
{
    auto violation = [](Construction2Params p) {
        try {
            construction2(p);
        } catch (const Error& e) {
            return e.code() == ErrorCode::ParamViolation;
        }
        return false;
    };
    EXPECT_TRUE(violation({2, 6, 4, 0, 4, 2}));  // m does not divide ell
    EXPECT_TRUE(violation({2, 6, 5, 0, 3, 2}));  // m > ell - d + s + 1
    EXPECT_TRUE(violation({2, 6, 5, 1, 3, 2}));  // r < q^s + 1
    EXPECT_TRUE(violation({2, 4, 4, 1, 2, 3}));  // s > 0 with d = ell
    EXPECT_TRUE(violation({2, 4, 2, 2, 2, 5}));  // s >= d
    EXPECT_TRUE(violation({2, 4, 2, 0, 2, 4}));  // r >= n
    EXPECT_TRUE(violation({2, 4, 5, 0, 2, 2}));  // d > ell
}
