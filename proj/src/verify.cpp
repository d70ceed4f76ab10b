/**************************************************************************
 * verify.cpp
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

#include "rsrepair/verify.hpp"

#include "rsrepair/bounds.hpp"
#include "rsrepair/constructions.hpp"
#include "rsrepair/error.hpp"
#include "rsrepair/expsum.hpp"
#include "rsrepair/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace rsrepair {

namespace {

constexpr std::size_t kMaxSamples = 8;

Element random_subfield(const FieldTower& f, std::mt19937_64& rng)
{
    const auto& b = f.subfield_elements();
    return b[rng() % b.size()];
}

/// `count` elements independent over B.
std::vector<Element> random_independent(const FieldTower& f, std::size_t count, std::mt19937_64& rng)
{
    std::vector<Element> out;
    Subspace span = Subspace::zero(f);
    while (out.size() < count) {
        const Element x = random_element(f, rng);
        if (span.contains(x))
            continue;
        out.push_back(x);
        span = Subspace::span(f, out);
    }
    return out;
}

std::string fmt_tuple(std::initializer_list<std::uint64_t> xs)
{
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (auto x : xs) {
        os << (first ? "" : ",") << x;
        first = false;
    }
    os << ')';
    return os.str();
}

// Three-way agreement of the I/O cost plus the normalized-form identities.
SuiteReport suite_expsum(const VerifyOptions& opt)
{
    SuiteReport rep{"expsum"};
    const std::size_t count = opt.size ? opt.size : 200;
    struct Params {
        unsigned q, ell, d, r;
    };
    std::vector<Params> grid;
    for (unsigned q : {2u, 3u})
        for (unsigned ell = 2; ell <= 6; ++ell)
            for (unsigned r : {2u, 3u})
                for (unsigned d = 2; d <= ell; ++d)
                    grid.push_back({q, ell, d, r});
    std::mt19937_64 rng(opt.seed);
    std::map<std::pair<unsigned, unsigned>, FieldTower> fields;
    std::set<std::size_t> distinct_t;
    for (std::size_t i = 0; i < count; ++i) {
        const Params& p = grid[i % grid.size()];
        auto it = fields.find({p.q, p.ell});
        if (it == fields.end())
            it = fields.emplace(std::pair{p.q, p.ell}, FieldTower::create(p.q, 1, p.ell)).first;
        const RepairScheme s = random_scheme(it->second, p.d, p.r, rng);
        const auto direct = metrics_direct(s);
        const auto weight = metrics_weight(s);
        const NormalForm nf = normalize(s);
        const auto ex = io_cost_expsum(nf);
        const auto normalized = io_cost_normalized(nf);
        const auto direct_nf = metrics_direct(nf.scheme);
        distinct_t.insert(nf.t);
        const std::string tag = fmt_tuple({p.q, p.ell, p.d, p.r});
        rep.check(direct.io_cost == weight.io_cost && direct.io_cost == ex, [&] {
            return tag + " io direct/weight/expsum = " + std::to_string(direct.io_cost) + "/" +
                   std::to_string(weight.io_cost) + "/" + std::to_string(ex);
        });
        rep.check(normalized == direct.io_cost, [&] {
            return tag + " normalized formula " + std::to_string(normalized) + " vs " + std::to_string(direct.io_cost);
        });
        rep.check(direct_nf.io_cost == direct.io_cost && direct_nf.bandwidth == direct.bandwidth,
                  [&] { return tag + " normalization changed the metrics"; });
        rep.check(direct.bandwidth == weight.bandwidth && direct.bandwidth <= direct.io_cost,
                  [&] { return tag + " bandwidth exceeds io or methods disagree"; });
    }
    rep.notes.push_back(std::to_string(count) + " random schemes, " + std::to_string(distinct_t.size()) +
                        " distinct values of t");
    return rep;
}

SuiteReport suite_weil(const VerifyOptions& opt)
{
    SuiteReport rep{"weil"};
    const std::size_t per_field = opt.size ? opt.size : 20;
    std::mt19937_64 rng(opt.seed);
    struct Case {
        unsigned p, a, ell;
    };
    for (const Case cs : {Case{2, 1, 4}, Case{2, 1, 6}, Case{2, 2, 3}, Case{3, 1, 4}, Case{5, 1, 3}, Case{7, 1, 2}}) {
        const FieldTower f = FieldTower::create(cs.p, cs.a, cs.ell);
        const std::string tag = "GF(" + std::to_string(cs.p) + "^" + std::to_string(cs.a * cs.ell) + ")";
        // x + c sums to zero
        const Element c = random_element(f, rng);
        const auto lin = weil_check(f, Polynomial({c, f.one()}));
        rep.check(lin.magnitude < 1e-9 && lin.pass, [&] { return tag + " x + c does not sum to 0"; });
        for (std::size_t i = 0; i < per_field; ++i) {
            unsigned e = 1 + static_cast<unsigned>(rng() % 9);
            if (e % cs.p == 0)
                ++e;
            std::vector<Element> coeffs(e + 1);
            for (auto& x : coeffs)
                x = random_element(f, rng);
            while (coeffs[e].is_zero())
                coeffs[e] = random_element(f, rng);
            const auto res = weil_check(f, Polynomial(coeffs));
            rep.check(res.pass, [&] {
                return tag + " degree " + std::to_string(e) + ": |sum| " + std::to_string(res.magnitude) +
                       " > " + std::to_string(res.bound);
            });
        }
    }
    return rep;
}

// Every subspace of dimension <= max_dim, grown one generator at a time.
std::vector<Subspace> all_subspaces(const FieldTower& f, std::size_t max_dim)
{
    std::vector<Subspace> out{Subspace::zero(f)};
    std::set<std::vector<Element>> seen{Subspace::zero(f).prime_basis()};
    std::vector<Subspace> level{Subspace::zero(f)};
    const auto everything = Subspace::whole(f).enumerate();
    for (std::size_t dim = 1; dim <= max_dim; ++dim) {
        std::vector<Subspace> next;
        for (const auto& g : level) {
            for (Element x : everything) {
                if (g.contains(x))
                    continue;
                auto gens = g.basis();
                gens.push_back(x);
                Subspace h = Subspace::span(f, gens);
                if (seen.insert(h.prime_basis()).second)
                    next.push_back(std::move(h));
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return out;
}

SuiteReport suite_char(const VerifyOptions&)
{
    SuiteReport rep{"char"};
    for (unsigned p : {2u, 3u}) {
        const FieldTower f = FieldTower::create(p, 1, 4);
        const auto subspaces = all_subspaces(f, 3);
        const auto scales = Subspace::whole(f).enumerate();
        for (const auto& g : subspaces) {
            const auto elems = g.enumerate();
            for (Element scale : scales) {
                std::vector<Element> values;
                for (Element x : elems)
                    values.push_back(f.mul(scale, x));
                const auto direct = char_sum(f, values).integer_value();
                bool in_kernel = true;
                for (Element b : g.basis())
                    in_kernel = in_kernel && f.trace(f.mul(scale, b)).is_zero();
                const std::int64_t expected = in_kernel ? static_cast<std::int64_t>(elems.size()) : 0;
                std::int64_t via_lib = -1;
                try {
                    via_lib = subspace_char_sum(g, scale);
                } catch (const Error& e) {
                    rep.check(false, [&] { return std::string(e.what()); });
                    continue;
                }
                rep.check(direct && *direct == expected && via_lib == expected, [&] {
                    return "GF(" + std::to_string(p) + "^4) dim " + std::to_string(g.dim()) + " scale " +
                           std::to_string(scale.value()) + ": expected " + std::to_string(expected);
                });
            }
        }
        rep.notes.push_back("GF(" + std::to_string(p) + "^4): " + std::to_string(subspaces.size()) +
                            " subspaces of dimension <= 3");
    }
    return rep;
}

SuiteReport suite_duality(const VerifyOptions& opt)
{
    SuiteReport rep{"duality"};
    const std::size_t trials = opt.size ? opt.size : 20;
    std::mt19937_64 rng(opt.seed);
    struct Case {
        unsigned p, a, ell, d;
    };
    for (const Case cs : {Case{2, 1, 4, 4}, Case{2, 1, 5, 3}, Case{3, 1, 3, 2}, Case{2, 2, 2, 2}, Case{5, 1, 2, 1}}) {
        const FieldTower f = FieldTower::create(cs.p, cs.a, cs.ell);
        const Subspace a = Subspace::span(f, random_independent(f, cs.d, rng));
        const auto bp = BasisPair::dual_basis(f, random_independent(f, cs.ell, rng));
        for (std::size_t k = 1; k < a.size(); ++k) {
            const auto res = dual_inner_product_check(RSCode(a, k), bp, trials, rng());
            rep.check(res.ok(), [&] {
                return "p=" + std::to_string(cs.p) + " ell=" + std::to_string(cs.ell) + " k=" + std::to_string(k) +
                       ": " + std::to_string(res.scalar_failures) + " scalar, " +
                       std::to_string(res.vector_failures) + " vector failures";
            });
        }
    }
    return rep;
}

SuiteReport suite_lemma5(const VerifyOptions& opt)
{
    SuiteReport rep{"lemma5"};
    std::mt19937_64 rng(opt.seed);
    struct Case {
        unsigned p, ell;
    };
    std::vector<Case> cases;
    for (unsigned ell = 1; ell <= 8; ++ell)
        cases.push_back({2, ell});
    for (unsigned ell = 1; ell <= 5; ++ell)
        cases.push_back({3, ell});
    for (const Case cs : cases) {
        const FieldTower f = FieldTower::create(cs.p, 1, cs.ell);
        // A random basis plus one dependent element, so some subsets are dependent.
        auto elems = random_independent(f, cs.ell, rng);
        elems.push_back(cs.ell >= 2 ? f.add(elems[0], elems[1]) : f.add(elems[0], elems[0]));
        std::vector<Subspace> kernels;
        for (Element b : elems)
            kernels.push_back(b.is_zero() ? Subspace::whole(f) : scaled_trace_kernel(f, b));
        for (std::uint32_t mask = 1; mask < (1u << elems.size()); ++mask) {
            std::vector<Subspace> picked;
            std::vector<Element> subset;
            for (std::size_t i = 0; i < elems.size(); ++i) {
                if (mask >> i & 1) {
                    picked.push_back(kernels[i]);
                    subset.push_back(elems[i]);
                }
            }
            const auto dim = intersect(picked).dim();
            const auto rk = rank_over_subfield(f, subset);
            rep.check(dim + rk == cs.ell, [&] {
                return "p=" + std::to_string(cs.p) + " ell=" + std::to_string(cs.ell) + " mask " +
                       std::to_string(mask) + ": dim " + std::to_string(dim) + ", rank " + std::to_string(rk);
            });
        }
    }
    return rep;
}

SuiteReport suite_annihilator(const VerifyOptions& opt)
{
    SuiteReport rep{"annihilator"};
    std::mt19937_64 rng(opt.seed);
    struct Case {
        unsigned p, ell;
    };
    std::vector<Case> cases;
    for (unsigned ell = 2; ell <= 8; ++ell)
        cases.push_back({2, ell});
    for (unsigned ell = 2; ell <= 5; ++ell)
        cases.push_back({3, ell});
    for (const Case cs : cases) {
        const FieldTower f = FieldTower::create(cs.p, 1, cs.ell);
        const auto everything = Subspace::whole(f).enumerate();
        for (unsigned t = 1; t <= std::min(3u, cs.ell - 1); ++t) {
            const auto betas = random_independent(f, t, rng);
            const QPolynomial l = qpoly_annihilator(f, betas);
            std::vector<Subspace> ks;
            for (Element b : betas)
                ks.push_back(scaled_trace_kernel(f, b));
            const auto target = intersect(ks).enumerate();
            std::set<Element> image_set;
            for (Element x : everything)
                image_set.insert(l.eval(f, x));
            const std::set<Element> target_set(target.begin(), target.end());
            const std::string tag = "p=" + std::to_string(cs.p) + " ell=" + std::to_string(cs.ell) +
                                    " t=" + std::to_string(t);
            rep.check(image_set == target_set, [&] { return tag + ": image differs from the kernel intersection"; });
            rep.check(l.q_degree() == t && l.theta().back() == f.one(), [&] { return tag + ": not monic of q-degree t"; });
            rep.check(target_set.size() == everything.size() / static_cast<std::size_t>(std::pow(cs.p, t)),
                      [&] { return tag + ": image dimension is not ell - t"; });
        }
    }
    return rep;
}

SuiteReport suite_r3cond(const VerifyOptions&)
{
    SuiteReport rep{"r3cond"};
    for (unsigned ell = 2; ell <= 8; ++ell) {
        for (unsigned d = 2; d <= ell; ++d) {
            const auto res = r3cond_max_bruteforce(ell, d, ell);
            const std::uint64_t expected = std::uint64_t{ell - d + 2} << (d - 1 + res.scale_log2);
            rep.check(res.scaled_max == expected, [&] {
                return "(ell,d)=" + fmt_tuple({ell, d}) + ": max " + std::to_string(res.value()) + ", expected " +
                       std::to_string((ell - d + 2) << (d - 1));
            });
            for (const auto& tup : res.argmax)
                rep.check(tup.t == tup.m && tup.m <= 2 * (ell - d + 2), [&] {
                    return "(ell,d)=" + fmt_tuple({ell, d}) + ": argmax with t'=" + std::to_string(tup.t) +
                           ", m=" + std::to_string(tup.m);
                });
        }
    }
    return rep;
}

SuiteReport suite_bmin(const VerifyOptions&)
{
    SuiteReport rep{"bmin"};
    struct Case {
        unsigned q, d, r;
    };
    std::vector<Case> cases;
    for (unsigned d = 1; d <= 4; ++d)
        for (unsigned r : {2u, 3u})
            cases.push_back({2, d, r});
    for (unsigned d = 1; d <= 2; ++d)
        cases.push_back({3, d, 2});
    for (const Case cs : cases) {
        for (unsigned ell = cs.d; ell <= 6; ++ell) {
            for (unsigned m = 0; m <= ell; ++m) {
                std::optional<std::uint64_t> balanced, literal;
                try {
                    balanced = bmin_bruteforce(cs.q, ell, cs.d, m, cs.r);
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::Infeasible)
                        throw;
                }
                try {
                    literal = bmin_literal(cs.q, ell, cs.d, m, cs.r);
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::Infeasible)
                        throw;
                }
                rep.check(balanced == literal, [&] {
                    return "(q,ell,d,m,r)=" + fmt_tuple({cs.q, ell, cs.d, m, cs.r}) + ": balanced " +
                           (balanced ? std::to_string(*balanced) : "infeasible") + ", literal " +
                           (literal ? std::to_string(*literal) : "infeasible");
                });
            }
        }
    }
    const auto b48 = bandwidth_from_bmin(2, 4, 4, 2, 2);
    rep.check(b48 == 48, [&] { return "r=2, ell=d=4, m=2 gave " + std::to_string(b48) + ", expected 48"; });
    const auto b38 = bandwidth_from_bmin(2, 4, 4, 4, 3);
    rep.check(b38 == 38, [&] { return "r=3, ell=d=4, m=4 gave " + std::to_string(b38) + ", expected 38"; });
    return rep;
}

SuiteReport suite_weight(const VerifyOptions& opt)
{
    SuiteReport rep{"weight"};
    const std::size_t count = opt.size ? opt.size : 500;
    std::mt19937_64 rng(opt.seed);
    std::vector<FieldTower> fields{FieldTower::create(2, 1, 2), FieldTower::create(3, 1, 2),
                                   FieldTower::create(2, 2, 2), FieldTower::create(5, 1, 2)};
    for (std::size_t i = 0; i < count; ++i) {
        const FieldTower& f = fields[i % fields.size()];
        const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 8;
        Matrix g(rows, cols);
        for (std::size_t c = 0; c < cols; ++c) {
            if (rng() % 4 == 0)
                continue; // leave some columns zero
            for (std::size_t r = 0; r < rows; ++r)
                g(r, c) = random_subfield(f, rng);
        }
        const auto via_weight = nz_via_weight(f, g);
        const auto direct = nonzero_columns(g);
        rep.check(via_weight == direct, [&] {
            return "q=" + std::to_string(f.q()) + " " + std::to_string(rows) + "x" + std::to_string(cols) +
                   ": weight " + std::to_string(via_weight) + ", direct " + std::to_string(direct);
        });
    }
    return rep;
}

} // namespace

void SuiteReport::check(bool ok, const std::function<std::string()>& describe)
{
    ++checks;
    if (ok)
        return;
    ++failures;
    if (samples.size() < kMaxSamples)
        samples.push_back(describe());
}

Matrix random_invertible(const FieldTower& f, std::size_t n, std::mt19937_64& rng)
{
    const TowerField k(f);
    for (;;) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m(i, j) = random_subfield(f, rng);
        if (rank(m, k) == n)
            return m;
    }
}

RepairScheme random_scheme(const FieldTower& f, unsigned d, unsigned r, std::mt19937_64& rng)
{
    const unsigned ell = f.ell();
    if (d < 1 || d > ell)
        throw Error(ErrorCode::ParamViolation, "random_scheme needs 1 <= d <= ell");
    const Subspace a = Subspace::span(f, random_independent(f, d, rng));
    if (r < 1 || r >= a.size())
        throw Error(ErrorCode::ParamViolation, "random_scheme needs 1 <= r < q^d");
    RSCode code(a, a.size() - r);
    const auto bp = BasisPair::dual_basis(f, random_independent(f, ell, rng));
    const auto omega = random_independent(f, ell, rng);
    const std::size_t cut = rng() % (ell + 1);
    std::vector<Polynomial> polys;
    for (std::size_t j = 0; j < ell; ++j) {
        std::vector<Element> coeffs(j < cut ? r : 1);
        coeffs[0] = omega[j];
        for (std::size_t c = 1; c < coeffs.size(); ++c)
            coeffs[c] = random_element(f, rng);
        polys.emplace_back(std::move(coeffs));
    }
    const RepairScheme base(std::move(code), bp, std::move(polys), 0);
    return transform(base, random_invertible(f, ell, rng));
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"expsum", "weil",   "char", "duality", "lemma5",
                                                "annihilator", "r3cond", "bmin", "weight"};
    return names;
}

SuiteReport run_suite(std::string_view name, const VerifyOptions& opt)
{
    if (name == "expsum")
        return suite_expsum(opt);
    if (name == "weil")
        return suite_weil(opt);
    if (name == "char")
        return suite_char(opt);
    if (name == "duality")
        return suite_duality(opt);
    if (name == "lemma5")
        return suite_lemma5(opt);
    if (name == "annihilator")
        return suite_annihilator(opt);
    if (name == "r3cond")
        return suite_r3cond(opt);
    if (name == "bmin")
        return suite_bmin(opt);
    if (name == "weight")
        return suite_weight(opt);
    throw Error(ErrorCode::ParamViolation, "unknown suite '" + std::string(name) + "'");
}

} // namespace rsrepair
