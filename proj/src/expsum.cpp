/**************************************************************************
 * expsum.cpp
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

#include "rsrepair/expsum.hpp"

#include "rsrepair/error.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

namespace rsrepair {

CharSum& CharSum::operator+=(const CharSum& other)
{
    if (other.p() != p())
        throw Error(ErrorCode::AmbientMismatch, "character sums over different primes");
    for (std::size_t c = 0; c < counts_.size(); ++c)
        counts_[c] += other.counts_[c];
    return *this;
}

CharSum CharSum::canonical() const
{
    CharSum out = *this;
    const std::int64_t lo = *std::min_element(counts_.begin(), counts_.end());
    for (auto& c : out.counts_)
        c -= lo;
    return out;
}

bool CharSum::is_rational_integer() const noexcept
{
    for (std::size_t c = 2; c < counts_.size(); ++c)
        if (counts_[c] != counts_[1])
            return false;
    return true;
}

std::optional<std::int64_t> CharSum::integer_value() const noexcept
{
    if (!is_rational_integer())
        return std::nullopt;
    return counts_.size() == 1 ? counts_[0] : counts_[0] - counts_[1];
}

double CharSum::magnitude() const noexcept
{
    if (auto v = integer_value())
        return std::abs(static_cast<double>(*v));
    std::complex<double> z{0, 0};
    const double step = 2 * std::numbers::pi / static_cast<double>(p());
    for (std::size_t c = 0; c < counts_.size(); ++c)
        z += static_cast<double>(counts_[c]) * std::polar(1.0, step * static_cast<double>(c));
    return std::abs(z);
}

CharSum char_sum(const FieldTower& f, std::span<const Element> values)
{
    CharSum s(f.p());
    for (Element x : values)
        s.add_residue(f.absolute_trace(x));
    return s;
}

std::int64_t subspace_char_sum(const Subspace& g, Element scale)
{
    const FieldTower& f = g.tower();
    CharSum direct(f.p());
    bool in_kernel = true;
    for (Element x : g.enumerate()) {
        const Element y = f.mul(scale, x);
        direct.add_residue(f.absolute_trace(y));
        in_kernel = in_kernel && f.trace(y).is_zero();
    }
    const auto v = direct.integer_value();
    const std::int64_t expected = in_kernel ? static_cast<std::int64_t>(g.size()) : 0;
    if (!v || *v != expected)
        throw Error(ErrorCode::Internal, "character sum over a subspace disagrees with the kernel test");
    return expected;
}

std::uint64_t io_cost_expsum(const NormalForm& nf)
{
    const RepairScheme& s = nf.scheme;
    const FieldTower& f = s.tower();
    const auto& b = f.subfield_elements();
    const std::size_t q = b.size();
    const std::size_t m = nf.m;
    std::uint64_t qm = 1;
    for (std::size_t i = 0; i < m; ++i)
        qm *= q;

    CharSum total(f.p());
    std::vector<Element> v(m);
    std::vector<std::size_t> idx(m);
    for (Element alpha : s.code().points()) {
        std::vector<Element> g_alpha(m);
        for (std::size_t j = 0; j < m; ++j)
            g_alpha[j] = s.polys()[j].eval(f, alpha);
        for (std::size_t si : nf.support) {
            const Element beta = s.basis().beta()[si];
            for (std::size_t j = 0; j < m; ++j)
                v[j] = f.mul(g_alpha[j], beta);
            // sum over u in B^m of chi(sum_j u_j v_j), odometer order
            std::fill(idx.begin(), idx.end(), 0);
            Element acc{0};
            for (std::uint64_t n = 0; n < qm; ++n) {
                total.add_residue(f.absolute_trace(acc));
                for (std::size_t pos = m; pos > 0; --pos) {
                    const std::size_t r = pos - 1;
                    const std::size_t old = idx[r];
                    const std::size_t nxt = (old + 1) % q;
                    idx[r] = nxt;
                    acc = f.add(acc, f.mul(f.sub(b[nxt], b[old]), v[r]));
                    if (nxt != 0)
                        break;
                }
            }
        }
    }
    const auto value = total.integer_value();
    if (!value || *value < 0 || static_cast<std::uint64_t>(*value) % qm != 0)
        throw Error(ErrorCode::NonIntegerSum, "character sum is not a nonnegative multiple of q^m");
    const std::uint64_t zeros = static_cast<std::uint64_t>(*value) / qm;
    return (s.code().n() - 1) * s.ell() - zeros;
}

WeilResult weil_check(const FieldTower& f, const Polynomial& poly)
{
    const int e = poly.degree();
    if (e < 1 || static_cast<unsigned>(e) % f.p() == 0)
        throw Error(ErrorCode::DegreeSharesCharacteristic, "the degree must be positive and prime to p");
    CharSum s(f.p());
    for (std::uint32_t v = 0; v < f.size(); ++v)
        s.add_residue(f.absolute_trace(poly.eval(f, Element{v})));
    WeilResult r;
    r.magnitude = s.magnitude();
    r.bound = static_cast<double>(e - 1) * std::sqrt(static_cast<double>(f.size()));
    r.pass = r.magnitude <= r.bound + 1e-9;
    return r;
}

} // namespace rsrepair
