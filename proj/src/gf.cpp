/**************************************************************************
 * gf.cpp
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

#include "rsrepair/gf.hpp"

#include "rsrepair/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>
#include <unordered_map>

namespace rsrepair {

namespace {

using Poly = std::vector<unsigned>; // coefficients over GF(p), low to high

bool is_prime(unsigned n)
{
    if (n < 2)
        return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

unsigned inv_mod(unsigned x, unsigned p)
{
    // p is small and prime
    unsigned r = 1;
    unsigned e = p - 2;
    unsigned b = x % p;
    while (e) {
        if (e & 1)
            r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

void trim(Poly& f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, unsigned p)
{
    trim(a);
    const std::size_t df = f.size() - 1;
    const unsigned lead_inv = inv_mod(f.back(), p);
    while (a.size() > df) {
        const std::size_t shift = a.size() - 1 - df;
        const unsigned c = a.back() * lead_inv % p;
        for (std::size_t i = 0; i <= df; ++i)
            a[shift + i] = (a[shift + i] + (p - c) * f[i]) % p;
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& x, const Poly& y, const Poly& f, unsigned p)
{
    if (x.empty() || y.empty())
        return {};
    Poly out(x.size() + y.size() - 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            out[i + j] = (out[i + j] + x[i] * y[j]) % p;
    return poly_mod(std::move(out), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, unsigned p)
{
    Poly r{1};
    base = poly_mod(std::move(base), f, p);
    while (e) {
        if (e & 1)
            r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly x, Poly y, unsigned p)
{
    trim(x);
    trim(y);
    while (!y.empty()) {
        Poly r = poly_mod(x, y, p);
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

Poly poly_sub(Poly x, const Poly& y, unsigned p)
{
    if (x.size() < y.size())
        x.resize(y.size(), 0);
    for (std::size_t i = 0; i < y.size(); ++i)
        x[i] = (x[i] + p - y[i]) % p;
    trim(x);
    return x;
}

/// Rabin's test for a monic f of degree D over GF(p).
bool is_irreducible(const Poly& f, unsigned p)
{
    const std::size_t deg = f.size() - 1;
    if (deg == 0)
        return false;
    if (deg == 1)
        return true;
    if (f[0] == 0)
        return false;
    const Poly x{0, 1};
    // x^(p^k) mod f for k = 1..deg
    std::vector<Poly> frob(deg + 1);
    frob[0] = poly_mod(x, f, p);
    for (std::size_t k = 1; k <= deg; ++k)
        frob[k] = poly_powmod(frob[k - 1], p, f, p);
    if (!poly_sub(frob[deg], x, p).empty())
        return false;
    for (std::uint64_t r : prime_factors(deg)) {
        Poly g = poly_gcd(f, poly_sub(frob[deg / r], x, p), p);
        if (g.size() != 1)
            return false;
    }
    return true;
}

} // namespace

unsigned max_field_bits()
{
    if (const char* env = std::getenv("RSREPAIR_MAX_FIELD_BITS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 24)
            return static_cast<unsigned>(v);
    }
    return 20;
}

struct FieldTower::Tables {
    unsigned p = 0;
    unsigned a = 0;
    unsigned ell = 0;
    unsigned deg = 0;
    std::uint32_t q = 0;
    std::uint32_t n = 0; // field size
    std::vector<unsigned> modulus;
    std::vector<std::uint32_t> pow_p; // p^i, i = 0..deg
    Element primitive;
    std::optional<Element> subfield_generator;
    std::vector<std::uint32_t> exp; // length 2(n-1)
    std::vector<std::uint32_t> log;
    std::vector<std::uint32_t> trace;
    std::vector<std::uint8_t> abs_trace;
    std::vector<Element> subfield;
    std::unordered_map<std::uint32_t, std::size_t> subfield_index;

    std::uint32_t add(std::uint32_t x, std::uint32_t y) const noexcept
    {
        if (p == 2)
            return x ^ y;
        std::uint32_t out = 0;
        for (unsigned i = 0; i < deg && (x | y); ++i) {
            out += ((x % p + y % p) % p) * pow_p[i];
            x /= p;
            y /= p;
        }
        return out;
    }

    std::uint32_t scale(std::uint32_t x, unsigned c) const noexcept
    {
        std::uint32_t out = 0;
        for (unsigned i = 0; i < deg && x; ++i) {
            out += (x % p * c % p) * pow_p[i];
            x /= p;
        }
        return out;
    }

    Poly unpack(std::uint32_t x) const
    {
        Poly out(deg, 0);
        for (unsigned i = 0; i < deg; ++i) {
            out[i] = x % p;
            x /= p;
        }
        return out;
    }

    std::uint32_t pack(const Poly& c) const
    {
        std::uint32_t out = 0;
        for (std::size_t i = 0; i < c.size() && i < deg; ++i)
            out += c[i] * pow_p[i];
        return out;
    }

    // Multiplication without tables; used only while building them.
    std::uint32_t slow_mul(std::uint32_t x, std::uint32_t y) const
    {
        if (p == 2) {
            const std::uint32_t red = pack(modulus); // modulus without x^deg
            std::uint32_t out = 0;
            while (y) {
                if (y & 1)
                    out ^= x;
                y >>= 1;
                x <<= 1;
                if (x >> deg & 1)
                    x = (x ^ (1u << deg)) ^ red;
            }
            return out;
        }
        return pack(poly_mulmod(unpack(x), unpack(y), modulus, p));
    }

    std::uint32_t slow_pow(std::uint32_t x, std::uint64_t e) const
    {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1)
                r = slow_mul(r, x);
            x = slow_mul(x, x);
            e >>= 1;
        }
        return r;
    }

    std::uint32_t mul(std::uint32_t x, std::uint32_t y) const noexcept
    {
        if (x == 0 || y == 0)
            return 0;
        return exp[log[x] + log[y]];
    }

    std::uint32_t power(std::uint32_t x, std::uint64_t e) const noexcept
    {
        if (x == 0)
            return e == 0 ? 1 : 0;
        const std::uint64_t ord = n - 1;
        return exp[static_cast<std::uint64_t>(log[x]) * (e % ord) % ord];
    }

    // q^k mod (n - 1), k in [0, ell)
    std::uint64_t frob_exponent(unsigned k) const noexcept
    {
        const std::uint64_t ord = n - 1;
        std::uint64_t e = 1 % ord;
        for (unsigned i = 0; i < k; ++i)
            e = e * q % ord;
        return e;
    }

    std::size_t lowest_digit(std::uint32_t v) const noexcept
    {
        if (p == 2)
            return static_cast<std::size_t>(std::countr_zero(v));
        std::size_t j = 0;
        while (v % p == 0) {
            v /= p;
            ++j;
        }
        return j;
    }

    void build(); // fills everything after modulus is fixed
};

void FieldTower::Tables::build()
{
    pow_p.assign(deg + 1, 1);
    for (unsigned i = 1; i <= deg; ++i)
        pow_p[i] = pow_p[i - 1] * p;
    n = pow_p[deg];
    q = pow_p[a];

    // smallest primitive element
    const std::uint64_t ord = n - 1;
    const auto factors = prime_factors(ord);
    std::uint32_t g = 0;
    for (std::uint32_t c = 1; c < n; ++c) {
        bool ok = true;
        for (std::uint64_t f : factors) {
            if (slow_pow(c, ord / f) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            g = c;
            break;
        }
    }
    if (g == 0)
        throw Error(ErrorCode::Internal, "no primitive element found");
    primitive = Element{g};

    exp.assign(2 * ord, 0);
    log.assign(n, 0);
    std::uint32_t cur = 1;
    for (std::uint64_t i = 0; i < ord; ++i) {
        exp[i] = cur;
        exp[i + ord] = cur;
        log[cur] = static_cast<std::uint32_t>(i);
        cur = slow_mul(cur, g);
    }
    if (cur != 1)
        throw Error(ErrorCode::Internal, "primitive element has wrong order");

    // Traces are GF(p)-linear: evaluate on the monomials, then extend.
    std::vector<std::uint32_t> mono_trace(deg);
    std::vector<unsigned> mono_abs(deg);
    for (unsigned j = 0; j < deg; ++j) {
        const std::uint32_t e = pow_p[j];
        std::uint32_t t = 0;
        for (unsigned i = 0; i < ell; ++i)
            t = add(t, power(e, frob_exponent(i)));
        mono_trace[j] = t;
        std::uint32_t s = 0;
        std::uint32_t conj = e;
        for (unsigned i = 0; i < deg; ++i) {
            s = add(s, conj);
            conj = power(conj, p);
        }
        if (s >= p)
            throw Error(ErrorCode::Internal, "absolute trace left the prime field");
        mono_abs[j] = s;
    }
    trace.assign(n, 0);
    abs_trace.assign(n, 0);
    for (std::uint32_t v = 1; v < n; ++v) {
        const std::size_t j = lowest_digit(v);
        const std::uint32_t w = v - pow_p[j];
        trace[v] = add(trace[w], mono_trace[j]);
        abs_trace[v] = static_cast<std::uint8_t>((abs_trace[w] + mono_abs[j]) % p);
    }

    subfield.clear();
    subfield.push_back(Element{0});
    if (a == 1) {
        for (unsigned c = 1; c < p; ++c)
            subfield.push_back(Element{c});
    } else {
        const std::uint32_t h = exp[ord / (q - 1)];
        subfield_generator = Element{h};
        std::uint32_t x = 1;
        for (std::uint32_t i = 0; i + 1 < q; ++i) {
            subfield.push_back(Element{x});
            x = mul(x, h);
        }
    }
    for (std::size_t i = 0; i < subfield.size(); ++i)
        subfield_index.emplace(subfield[i].value(), i);
}

FieldTower FieldTower::with_modulus(unsigned p, unsigned a, unsigned ell, std::vector<unsigned> modulus)
{
    if (!is_prime(p))
        throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (a == 0 || ell == 0)
        throw Error(ErrorCode::ParamViolation, "a and ell must be positive");
    const unsigned deg = a * ell;
    double bits = deg * std::log2(static_cast<double>(p));
    if (bits > max_field_bits() + 1e-9)
        throw Error(ErrorCode::TooLarge,
                    "q^ell = " + std::to_string(p) + "^" + std::to_string(deg) + " exceeds 2^" +
                        std::to_string(max_field_bits()));
    if (modulus.size() != deg + 1 || modulus.back() != 1)
        throw Error(ErrorCode::Parse, "modulus must be monic of degree a*ell");
    for (unsigned c : modulus)
        if (c >= p)
            throw Error(ErrorCode::Parse, "modulus coefficient out of range");
    if (!is_irreducible(modulus, p))
        throw Error(ErrorCode::Parse, "modulus is not irreducible");

    auto t = std::make_shared<Tables>();
    t->p = p;
    t->a = a;
    t->ell = ell;
    t->deg = deg;
    t->modulus = std::move(modulus);
    t->build();
    return FieldTower(std::move(t));
}

FieldTower FieldTower::create(unsigned p, unsigned a, unsigned ell)
{
    if (!is_prime(p))
        throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (a == 0 || ell == 0)
        throw Error(ErrorCode::ParamViolation, "a and ell must be positive");
    const unsigned deg = a * ell;
    if (deg * std::log2(static_cast<double>(p)) > max_field_bits() + 1e-9)
        throw Error(ErrorCode::TooLarge, "requested field exceeds 2^" + std::to_string(max_field_bits()));

    std::uint64_t count = 1;
    for (unsigned i = 0; i < deg; ++i)
        count *= p;
    for (std::uint64_t v = 0; v < count; ++v) {
        Poly f(deg + 1, 0);
        std::uint64_t x = v;
        for (unsigned i = 0; i < deg; ++i) {
            f[i] = static_cast<unsigned>(x % p);
            x /= p;
        }
        f[deg] = 1;
        if (is_irreducible(f, p))
            return with_modulus(p, a, ell, std::move(f));
    }
    throw Error(ErrorCode::Internal, "no irreducible polynomial found");
}

unsigned FieldTower::p() const noexcept { return t_->p; }
unsigned FieldTower::a() const noexcept { return t_->a; }
unsigned FieldTower::ell() const noexcept { return t_->ell; }
unsigned FieldTower::degree() const noexcept { return t_->deg; }
std::uint32_t FieldTower::q() const noexcept { return t_->q; }
std::uint32_t FieldTower::size() const noexcept { return t_->n; }
const std::vector<unsigned>& FieldTower::modulus() const noexcept { return t_->modulus; }
std::optional<Element> FieldTower::subfield_generator() const noexcept { return t_->subfield_generator; }
Element FieldTower::primitive() const noexcept { return t_->primitive; }

Element FieldTower::from_int(unsigned c) const { return Element{c % t_->p}; }

Element FieldTower::add(Element x, Element y) const noexcept { return Element{t_->add(x.value(), y.value())}; }

Element FieldTower::neg(Element x) const noexcept
{
    if (t_->p == 2)
        return x;
    return Element{t_->scale(x.value(), t_->p - 1)};
}

Element FieldTower::sub(Element x, Element y) const noexcept { return add(x, neg(y)); }

Element FieldTower::mul(Element x, Element y) const noexcept { return Element{t_->mul(x.value(), y.value())}; }

Element FieldTower::inv(Element x) const
{
    if (x.is_zero())
        throw Error(ErrorCode::ZeroScalar, "inverse of zero");
    const std::uint32_t ord = t_->n - 1;
    return Element{t_->exp[(ord - t_->log[x.value()]) % ord]};
}

Element FieldTower::div(Element x, Element y) const { return mul(x, inv(y)); }

Element FieldTower::pow(Element x, std::uint64_t e) const noexcept { return Element{t_->power(x.value(), e)}; }

Element FieldTower::frobenius(Element x, long long k) const noexcept
{
    const long long l = t_->ell;
    const unsigned kk = static_cast<unsigned>(((k % l) + l) % l);
    if (kk == 0 || x.is_zero())
        return x;
    return Element{t_->power(x.value(), t_->frob_exponent(kk))};
}

Element FieldTower::trace(Element x) const noexcept { return Element{t_->trace[x.value()]}; }

unsigned FieldTower::absolute_trace(Element x) const noexcept { return t_->abs_trace[x.value()]; }

std::uint32_t FieldTower::log(Element x) const
{
    if (x.is_zero())
        throw Error(ErrorCode::ZeroScalar, "log of zero");
    return t_->log[x.value()];
}

Element FieldTower::exp(std::uint64_t e) const noexcept { return Element{t_->exp[e % (t_->n - 1)]}; }

std::uint64_t FieldTower::order(Element x) const
{
    const std::uint64_t ord = t_->n - 1;
    return ord / std::gcd<std::uint64_t>(log(x), ord);
}

bool FieldTower::in_subfield(Element x) const noexcept { return frobenius(x, 1) == x; }

const std::vector<Element>& FieldTower::subfield_elements() const noexcept { return t_->subfield; }

std::size_t FieldTower::subfield_index(Element x) const
{
    auto it = t_->subfield_index.find(x.value());
    if (it == t_->subfield_index.end())
        throw Error(ErrorCode::ParamViolation, "element is not in the subfield");
    return it->second;
}

std::vector<unsigned> FieldTower::coords(Element x) const { return t_->unpack(x.value()); }

Element FieldTower::from_coords(std::span<const unsigned> coords) const
{
    if (coords.size() != t_->deg)
        throw Error(ErrorCode::Parse, "element must have a*ell coordinates");
    for (unsigned c : coords)
        if (c >= t_->p)
            throw Error(ErrorCode::Parse, "coordinate out of range");
    return Element{t_->pack(Poly(coords.begin(), coords.end()))};
}

bool operator==(const FieldTower& x, const FieldTower& y) noexcept
{
    if (x.t_ == y.t_)
        return true;
    return x.t_->p == y.t_->p && x.t_->a == y.t_->a && x.t_->ell == y.t_->ell && x.t_->modulus == y.t_->modulus;
}

} // namespace rsrepair
