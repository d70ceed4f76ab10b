/**************************************************************************
 * test_gf.cpp
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

#include "oracle.hpp"

#include "rsrepair/error.hpp"
#include "rsrepair/gf.hpp"
#include "rsrepair/rs.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace rsrepair;

namespace {

struct Shape {
    unsigned p, a, ell;
};

const std::vector<Shape> kShapes{{2, 1, 4}, {2, 1, 8}, {3, 1, 4}, {2, 2, 3}, {5, 1, 2}, {3, 2, 2}, {7, 1, 3}};

std::string name(const Shape& s)
{
    return "GF(" + std::to_string(s.p) + "^" + std::to_string(s.a) + "^" + std::to_string(s.ell) + ")";
}

} // namespace

TEST(Field, Gf16ModulusIsSmallestIrreducible)
{
    const FieldTower f = FieldTower::create(2, 1, 4);
    EXPECT_EQ(f.modulus(), (std::vector<unsigned>{1, 1, 0, 0, 1}));
    EXPECT_TRUE(oracle::irreducible(oracle::Digits(f.modulus().begin(), f.modulus().end()), 2));
    // every smaller monic quartic is reducible
    for (unsigned low = 0; low < 3; ++low) {
        auto g = oracle::to_digits(low, 2, 4);
        g.push_back(1);
        EXPECT_FALSE(oracle::irreducible(g, 2)) << low;
    }
}

TEST(Field, ModulusIsSmallestIrreducibleForEveryShape)
{
    for (const auto& s : kShapes) {
        const FieldTower f = FieldTower::create(s.p, s.a, s.ell);
        const oracle::Digits mod(f.modulus().begin(), f.modulus().end());
        ASSERT_EQ(mod.size(), s.a * s.ell + 1) << name(s);
        EXPECT_TRUE(oracle::irreducible(mod, s.p)) << name(s);
        EXPECT_EQ(mod.back(), 1u) << name(s);
        const auto packed = oracle::from_digits(oracle::Digits(mod.begin(), mod.end() - 1), s.p);
        for (std::uint64_t low = 0; low < packed; ++low) {
            auto g = oracle::to_digits(low, s.p, mod.size() - 1);
            g.push_back(1);
            ASSERT_FALSE(oracle::irreducible(g, s.p)) << name(s) << " smaller irreducible " << low;
        }
    }
}

TEST(Field, MultiplicationMatchesSchoolbook)
{
    std::mt19937_64 rng(11);
    for (const auto& s : kShapes) {
        const FieldTower f = FieldTower::create(s.p, s.a, s.ell);
        const oracle::Digits mod(f.modulus().begin(), f.modulus().end());
        for (int i = 0; i < 300; ++i) {
            const Element x = random_element(f, rng), y = random_element(f, rng);
            EXPECT_EQ(f.mul(x, y).value(), oracle::field_mul(x.value(), y.value(), mod, s.p)) << name(s);
        }
    }
}

TEST(Field, AxiomsOnRandomElements)
{
    std::mt19937_64 rng(12);
    for (const auto& s : kShapes) {
        const FieldTower f = FieldTower::create(s.p, s.a, s.ell);
        for (int i = 0; i < 200; ++i) {
            const Element x = random_element(f, rng), y = random_element(f, rng), z = random_element(f, rng);
            EXPECT_EQ(f.add(x, f.neg(x)), f.zero());
            EXPECT_EQ(f.sub(f.add(x, y), y), x);
            EXPECT_EQ(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
            EXPECT_EQ(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
            if (!x.is_zero()) {
                EXPECT_EQ(f.mul(x, f.inv(x)), f.one());
                EXPECT_EQ(f.div(f.mul(x, y), x), y);
                EXPECT_EQ(f.exp(f.log(x)), x);
            }
        }
    }
}

TEST(Field, FrobeniusIsAutomorphismOfOrderEll)
{
    std::mt19937_64 rng(13);
    for (const auto& s : kShapes) {
        const FieldTower f = FieldTower::create(s.p, s.a, s.ell);
        for (int i = 0; i < 100; ++i) {
            const Element x = random_element(f, rng), y = random_element(f, rng);
            EXPECT_EQ(f.frobenius(x, 1), f.pow(x, f.q()));
            EXPECT_EQ(f.frobenius(f.mul(x, y), 1), f.mul(f.frobenius(x, 1), f.frobenius(y, 1)));
            EXPECT_EQ(f.frobenius(x, static_cast<long long>(s.ell)), x);
            for (long long k = -3; k <= 3; ++k)
                EXPECT_EQ(f.frobenius(f.frobenius(x, k), -k), x);
        }
    }
}

TEST(Field, TraceIsSumOfConjugatesAndBLinear)
{
    std::mt19937_64 rng(14);
    for (const auto& s : kShapes) {
        const FieldTower f = FieldTower::create(s.p, s.a, s.ell);
        const auto& b = f.subfield_elements();
        for (int i = 0; i < 100; ++i) {
            const Element x = random_element(f, rng), y = random_element(f, rng);
            Element conj_sum = f.zero();
            for (unsigned k = 0; k < s.ell; ++k)
                conj_sum = f.add(conj_sum, f.frobenius(x, k));
            EXPECT_EQ(f.trace(x), conj_sum);
            EXPECT_TRUE(f.in_subfield(f.trace(x)));
            EXPECT_EQ(f.trace(f.add(x, y)), f.add(f.trace(x), f.trace(y)));
            const Element c = b[rng() % b.size()];
            EXPECT_EQ(f.trace(f.mul(c, x)), f.mul(c, f.trace(x)));
            // absolute trace: sum of all p-power conjugates, a residue in GF(p)
            Element abs = f.zero();
            Element xp = x;
            for (unsigned k = 0; k < s.a * s.ell; ++k) {
                abs = f.add(abs, xp);
                xp = f.pow(xp, s.p);
            }
            EXPECT_EQ(f.from_int(f.absolute_trace(x)), abs);
        }
    }
}

TEST(Field, SubfieldAndPrimitive)
{
    for (const auto& s : kShapes) {
        const FieldTower f = FieldTower::create(s.p, s.a, s.ell);
        const auto& b = f.subfield_elements();
        ASSERT_EQ(b.size(), f.q());
        EXPECT_EQ(b.front(), f.zero());
        EXPECT_EQ(std::set<Element>(b.begin(), b.end()).size(), b.size());
        std::size_t count = 0;
        for (std::uint32_t v = 0; v < f.size(); ++v)
            count += f.in_subfield(Element{v});
        EXPECT_EQ(count, f.q());
        for (std::size_t i = 0; i < b.size(); ++i)
            EXPECT_EQ(f.subfield_index(b[i]), i);
        EXPECT_EQ(f.order(f.primitive()), f.size() - 1);
        EXPECT_EQ(s.a > 1, f.subfield_generator().has_value());
    }
}

TEST(Field, CoordinatesRoundTrip)
{
    const FieldTower f = FieldTower::create(3, 1, 3);
    for (std::uint32_t v = 0; v < f.size(); ++v) {
        const auto c = f.coords(Element{v});
        EXPECT_EQ(c, oracle::to_digits(v, 3, 3));
        EXPECT_EQ(f.from_coords(c), Element{v});
    }
}

TEST(Field, TraceKernelHasIndexQ)
{
    const FieldTower f = FieldTower::create(2, 2, 3); // GF(64) over GF(4)
    std::size_t zeros = 0;
    for (std::uint32_t v = 0; v < f.size(); ++v)
        zeros += f.trace(Element{v}).is_zero();
    EXPECT_EQ(zeros, f.size() / f.q());
}

TEST(Field, Errors)
{
    EXPECT_THROW(FieldTower::create(4, 1, 2), Error);
    try {
        FieldTower::create(6, 1, 2);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotPrime);
    }
    try {
        FieldTower::create(2, 1, 40);
        ADD_FAILURE() << "huge field accepted";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::TooLarge);
    }
    const FieldTower f = FieldTower::create(2, 1, 4);
    EXPECT_THROW(f.inv(f.zero()), Error);
    EXPECT_THROW(f.log(f.zero()), Error);
    EXPECT_THROW(FieldTower::with_modulus(2, 1, 4, {1, 0, 0, 0, 1}), Error); // x^4 + 1 = (x+1)^4
}

TEST(Field, CustomModulusIsHonoured)
{
    const FieldTower f = FieldTower::with_modulus(2, 1, 4, {1, 0, 0, 1, 1});
    EXPECT_EQ(f.modulus(), (std::vector<unsigned>{1, 0, 0, 1, 1}));
    const oracle::Digits mod{1, 0, 0, 1, 1};
    for (std::uint32_t x = 0; x < 16; ++x)
        for (std::uint32_t y = 0; y < 16; ++y)
            ASSERT_EQ(f.mul(Element{x}, Element{y}).value(), oracle::field_mul(x, y, mod, 2));
}
