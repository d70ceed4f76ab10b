/**************************************************************************
 * bounds.cpp
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

#include "rsrepair/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace rsrepair {

namespace {

constexpr std::int64_t kLimit = std::int64_t{1} << 62;

std::int64_t ipow(std::uint64_t base, std::int64_t e)
{
    if (e < 0)
        throw Error(ErrorCode::Internal, "negative exponent in ipow");
    std::int64_t r = 1;
    for (std::int64_t i = 0; i < e; ++i) {
        if (r > kLimit / static_cast<std::int64_t>(base))
            throw Error(ErrorCode::TooLarge, "bound parameters overflow 64-bit arithmetic");
        r *= static_cast<std::int64_t>(base);
    }
    return r;
}

/// floor(q^e) for a possibly negative exponent (q >= 2).
std::int64_t floor_pow(std::uint64_t q, std::int64_t e) { return e < 0 ? 0 : ipow(q, e); }

std::int64_t isqrt(std::int64_t x)
{
    std::int64_t r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(x)));
    while (r > 0 && r * r > x)
        --r;
    while ((r + 1) * (r + 1) <= x)
        ++r;
    return r;
}

bool is_prime_power_of(std::uint64_t q, std::uint64_t& p)
{
    if (q < 2)
        return false;
    std::uint64_t f = 2;
    while (f * f <= q && q % f)
        ++f;
    if (f * f > q)
        f = q;
    p = f;
    while (q % f == 0)
        q /= f;
    return q == 1;
}

void check_query(const BoundQuery& bq)
{
    std::uint64_t p = 0;
    if (!is_prime_power_of(bq.q, p))
        throw Error(ErrorCode::ParamViolation, "q must be a prime power");
    if (bq.ell < 1 || bq.d < 1 || bq.d > bq.ell)
        throw Error(ErrorCode::ParamViolation, "need 1 <= d <= ell");
    if (bq.r < 2)
        throw Error(ErrorCode::ParamViolation, "need r >= 2");
    if (ipow(bq.q, bq.d) <= bq.r)
        throw Error(ErrorCode::ParamViolation, "need n = q^d > r");
}

BoundResult pick(std::vector<BoundCandidate> cands, BoundTheorem which, const char* what)
{
    if (which != BoundTheorem::Auto)
        std::erase_if(cands, [which](const BoundCandidate& c) { return c.theorem != which; });
    if (cands.empty())
        throw Error(ErrorCode::UnsupportedRegime,
                    std::string("no ") + what + " lower bound applies to these parameters");
    const auto best = std::max_element(cands.begin(), cands.end(),
                                       [](const auto& x, const auto& y) { return x.value < y.value; });
    BoundResult r;
    r.value = best->value;
    r.theorem = best->theorem;
    r.tight_known = best->tight_known;
    r.case_label = best->case_label;
    r.candidates = std::move(cands);
    return r;
}

} // namespace

std::string_view to_string(BoundTheorem t) noexcept
{
    switch (t) {
    case BoundTheorem::Auto: return "auto";
    case BoundTheorem::Coro11: return "coro11";
    case BoundTheorem::Thm4: return "thm4";
    case BoundTheorem::Thm6: return "thm6";
    case BoundTheorem::Thm5: return "thm5";
    case BoundTheorem::Thm8: return "thm8";
    }
    return "?";
}

std::optional<BoundTheorem> parse_bound_theorem(std::string_view s) noexcept
{
    for (auto t : {BoundTheorem::Auto, BoundTheorem::Coro11, BoundTheorem::Thm4, BoundTheorem::Thm6,
                   BoundTheorem::Thm5, BoundTheorem::Thm8})
        if (to_string(t) == s)
            return t;
    return std::nullopt;
}

BoundResult io_lower_bound(const BoundQuery& bq, BoundTheorem which)
{
    check_query(bq);
    std::uint64_t p = 0;
    is_prime_power_of(bq.q, p);
    const std::int64_t q = static_cast<std::int64_t>(bq.q);
    const std::int64_t ell = bq.ell, d = bq.d, r = bq.r;
    const std::int64_t n = ipow(bq.q, d);
    const std::int64_t base = (n - 1) * ell;

    std::vector<BoundCandidate> c;
    if (r == 2)
        c.push_back({BoundTheorem::Thm4, base - (ell - d + 1) * ipow(bq.q, d - 1), ell % (ell - d + 1) == 0, ""});
    if (r == 3 && q == 2)
        c.push_back({BoundTheorem::Thm6, base - (ell - d + 2) * ipow(2, d - 1),
                     d == ell || ell % (ell - d + 2) == 0, ""});
    if (d == ell && static_cast<std::uint64_t>(r) <= p) {
        // floor((r-2)(q-1) q^(ell/2-1)) = isqrt((r-2)^2 (q-1)^2 q^(ell-2)), exact for every ell.
        const std::int64_t a = (r - 2) * (r - 2) * (q - 1) * (q - 1);
        const std::int64_t term = ell >= 2 ? isqrt(a * ipow(bq.q, ell - 2)) : isqrt(a / q);
        c.push_back({BoundTheorem::Coro11, base - ipow(bq.q, ell - 1) - term, r == 2, ""});
    }
    return pick(std::move(c), which, "I/O");
}

BoundResult bandwidth_lower_bound(const BoundQuery& bq, BoundTheorem which)
{
    check_query(bq);
    const std::int64_t ell = bq.ell, d = bq.d, r = bq.r;
    const std::int64_t n = ipow(bq.q, d);

    std::vector<BoundCandidate> c;
    if (r == 2 && ell % (ell - d + 1) == 0) {
        if (d == ell && bq.q > 2)
            c.push_back({BoundTheorem::Thm5, (n - 1) * ell - ipow(bq.q, ell - 1), true, "(i)"});
        else if (d == ell)
            c.push_back({BoundTheorem::Thm5, (n - 1) * ell - 3 * floor_pow(2, ell - 2),
                         true, "(ii)"});
        else
            c.push_back({BoundTheorem::Thm5, (n - 1) * d - floor_pow(bq.q, 2 * d - ell - 1), false, "(iii)"});
    }
    if (r == 3 && bq.q == 2 && (d == ell || ell % (ell - d + 2) == 0)) {
        // ceil(A - 2^e1 + floor(2^e2)) = A - floor(2^e1) + floor(2^e2) for integer A.
        c.push_back({BoundTheorem::Thm8,
                     (n - 1) * (d - 1) - floor_pow(2, 2 * d - ell - 1) + floor_pow(2, 3 * d - 2 * ell - 4), false,
                     ""});
    }
    return pick(std::move(c), which, "bandwidth");
}

R3Result r3cond_max_bruteforce(unsigned ell, unsigned d, unsigned m_max, std::uint64_t budget)
{
    if (d < 1 || d > ell || ell > 30)
        throw Error(ErrorCode::ParamViolation, "need 1 <= d <= ell <= 30");
    m_max = std::min(m_max, ell);
    R3Result res;
    res.scale_log2 = ell;
    const unsigned head = ell - d + 2;

    for (unsigned m = 1; m <= m_max; ++m) {
        const std::uint64_t cap = static_cast<std::uint64_t>(ell - d + 1) * m;
        // 2^(d-m) 2^a scaled by 2^ell; d - m + ell >= d >= 1.
        const unsigned shift = d + ell - m;
        std::vector<unsigned> a;
        std::function<void(unsigned, std::uint64_t, std::uint64_t)> rec =
            [&](unsigned hi, std::uint64_t head_sum, std::uint64_t value) {
                if (!a.empty()) {
                    if (++res.visited > budget)
                        throw Error(ErrorCode::BudgetExceeded, "r3 enumeration exceeded its budget");
                    if (value > res.scaled_max) {
                        res.scaled_max = value;
                        res.argmax.clear();
                    }
                    if (value == res.scaled_max)
                        res.argmax.push_back(R3Tuple{m, static_cast<unsigned>(a.size()), a});
                }
                if (a.size() == m)
                    return;
                for (unsigned x = 0; x <= hi; ++x) {
                    const bool counted = a.size() < head;
                    const std::uint64_t hs = head_sum + (counted ? x : 0);
                    if (hs > cap)
                        break;
                    a.push_back(x);
                    rec(x, hs, value + (std::uint64_t{1} << (x + shift)));
                    a.pop_back();
                }
            };
        rec(m - 1, 0, 0);
    }
    std::sort(res.argmax.begin(), res.argmax.end());
    return res;
}

namespace {

struct BminSetup {
    std::uint64_t count;  // n - 1 helpers
    std::uint64_t budget; // right-hand side
    std::vector<std::uint64_t> cost; // cost[b] = base^(m-b)
};

BminSetup bmin_setup(std::uint64_t q, unsigned ell, unsigned d, unsigned m, unsigned r)
{
    if (m > ell || d > ell || d < 1)
        throw Error(ErrorCode::ParamViolation, "need d, m <= ell and d >= 1");
    BminSetup s;
    std::int64_t rhs = 0;
    std::uint64_t base = q;
    if (r == 2) {
        rhs = ipow(q, d) + ipow(q, ell) - ipow(q, ell - m) - 1;
    } else if (r == 3) {
        if (q != 2)
            throw Error(ErrorCode::UnsupportedRegime, "the r = 3 budget is defined for q = 2");
        base = 2;
        rhs = ipow(2, ell + 1) + ipow(2, d) - ipow(2, static_cast<std::int64_t>(ell) - m + 1) - 1;
    } else {
        throw Error(ErrorCode::UnsupportedRegime, "bmin is defined for r = 2 and r = 3");
    }
    s.count = static_cast<std::uint64_t>(ipow(q, d)) - 1;
    s.budget = static_cast<std::uint64_t>(rhs);
    for (unsigned b = 0; b <= m; ++b)
        s.cost.push_back(static_cast<std::uint64_t>(ipow(base, m - b)));
    if (s.count * s.cost[m] > s.budget)
        throw Error(ErrorCode::Infeasible, "even b_i = m for every helper violates the budget");
    return s;
}

} // namespace

std::uint64_t bmin_bruteforce(std::uint64_t q, unsigned ell, unsigned d, unsigned m, unsigned r)
{
    const BminSetup s = bmin_setup(q, ell, d, m, r);
    if (m == 0)
        return 0;
    const std::uint64_t n = s.count;
    for (std::uint64_t total = 0; total <= n * m; ++total) {
        const std::uint64_t v = total / n;
        const std::uint64_t hi = total % n; // helpers at v + 1
        const std::uint64_t lhs = (n - hi) * s.cost[v] + (hi ? hi * s.cost[v + 1] : 0);
        if (lhs <= s.budget)
            return total;
    }
    throw Error(ErrorCode::Internal, "feasible point not found by the balanced scan");
}

std::uint64_t bmin_literal(std::uint64_t q, unsigned ell, unsigned d, unsigned m, unsigned r)
{
    const BminSetup s = bmin_setup(q, ell, d, m, r);
    if (s.count + 1 > 16)
        throw Error(ErrorCode::BudgetExceeded, "literal enumeration is limited to n <= 16");
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    // Non-decreasing b sequences = multisets; the objective is symmetric.
    std::function<void(std::uint64_t, unsigned, std::uint64_t, std::uint64_t)> rec =
        [&](std::uint64_t left, unsigned lo, std::uint64_t sum, std::uint64_t lhs) {
            if (lhs > s.budget)
                return;
            if (left == 0) {
                best = std::min(best, sum);
                return;
            }
            for (unsigned b = lo; b <= m; ++b)
                rec(left - 1, b, sum + b, lhs + s.cost[b]);
        };
    rec(s.count, 0, 0, 0);
    return best;
}

std::uint64_t bandwidth_from_bmin(std::uint64_t q, unsigned ell, unsigned d, unsigned m, unsigned r)
{
    const std::uint64_t n = static_cast<std::uint64_t>(ipow(q, d));
    return (n - 1) * (ell - m) + bmin_bruteforce(q, ell, d, m, r);
}

} // namespace rsrepair
