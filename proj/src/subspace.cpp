/**************************************************************************
 * subspace.cpp
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

#include "rsrepair/subspace.hpp"

#include "rsrepair/error.hpp"

#include <string>

namespace rsrepair {

namespace {

unsigned digit(const FieldTower& f, Element x, unsigned c)
{
    std::uint32_t v = x.value();
    for (unsigned i = 0; i < c; ++i)
        v /= f.p();
    return v % f.p();
}

Element unit(const FieldTower& f, unsigned j)
{
    std::uint32_t v = 1;
    for (unsigned i = 0; i < j; ++i)
        v *= f.p();
    return Element{v};
}

Element prime_combination(const FieldTower& f, std::span<const Element> coeffs, std::span<const Element> vecs)
{
    Element acc{0};
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (!coeffs[i].is_zero())
            acc = f.add(acc, f.mul(coeffs[i], vecs[i]));
    return acc;
}

Matrix coordinate_rows(const FieldTower& f, std::span<const Element> xs)
{
    Matrix m(0, f.degree());
    for (Element x : xs) {
        const auto c = f.coords(x);
        std::vector<Element> row(c.size());
        for (std::size_t i = 0; i < c.size(); ++i)
            row[i] = Element{c[i]};
        m.append_row(row);
    }
    return m;
}

// Echelon set over GF(p) grown one vector at a time; rows are reduced in
// insertion order.
class PrimeEchelon {
public:
    explicit PrimeEchelon(const FieldTower& f) : f_(f) { }

    Element reduce(Element x) const
    {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const unsigned d = digit(f_, x, pivots_[i]);
            if (d)
                x = f_.sub(x, f_.mul(Element{d}, rows_[i]));
        }
        return x;
    }

    bool insert(Element x)
    {
        x = reduce(x);
        if (x.is_zero())
            return false;
        unsigned c = 0;
        while (digit(f_, x, c) == 0)
            ++c;
        x = f_.mul(f_.inv(Element{digit(f_, x, c)}), x);
        rows_.push_back(x);
        pivots_.push_back(c);
        return true;
    }

private:
    const FieldTower& f_;
    std::vector<Element> rows_;
    std::vector<unsigned> pivots_;
};

std::vector<Element> subfield_powers(const FieldTower& f)
{
    std::vector<Element> out{f.one()};
    if (auto h = f.subfield_generator())
        for (unsigned i = 1; i < f.a(); ++i)
            out.push_back(f.mul(out.back(), *h));
    return out;
}

} // namespace

Subspace::Subspace(FieldTower f, std::vector<Element> rows, std::vector<unsigned> pivots)
    : f_(std::move(f)), rows_(std::move(rows)), pivots_(std::move(pivots))
{
    const auto powers = subfield_powers(f_);
    PrimeEchelon closure(f_);
    for (Element r : rows_) {
        if (!closure.reduce(r).is_zero()) {
            basis_.push_back(r);
            for (Element h : powers)
                closure.insert(f_.mul(h, r));
        }
    }
}

Subspace Subspace::from_prime_span(const FieldTower& f, std::span<const Element> vectors)
{
    Matrix m = coordinate_rows(f, vectors);
    const auto piv = rref(m, PrimeField{f.p()});
    std::vector<Element> rows;
    std::vector<unsigned> pivots;
    for (std::size_t i = 0; i < piv.size(); ++i) {
        std::vector<unsigned> c(f.degree());
        for (std::size_t j = 0; j < c.size(); ++j)
            c[j] = m(i, j).value();
        rows.push_back(f.from_coords(c));
        pivots.push_back(static_cast<unsigned>(piv[i]));
    }
    return Subspace(f, std::move(rows), std::move(pivots));
}

Subspace Subspace::zero(const FieldTower& f) { return Subspace(f, {}, {}); }

Subspace Subspace::whole(const FieldTower& f)
{
    std::vector<Element> units;
    for (unsigned j = 0; j < f.degree(); ++j)
        units.push_back(unit(f, j));
    return from_prime_span(f, units);
}

Subspace Subspace::span(const FieldTower& f, std::span<const Element> vectors)
{
    const auto powers = subfield_powers(f);
    std::vector<Element> closed;
    closed.reserve(vectors.size() * powers.size());
    for (Element v : vectors) {
        if (!f.contains(v))
            throw Error(ErrorCode::AmbientMismatch, "vector is not an element of the field");
        for (Element h : powers)
            closed.push_back(f.mul(h, v));
    }
    return from_prime_span(f, closed);
}

Subspace Subspace::kernel(const FieldTower& f, const std::function<Element(Element)>& map)
{
    std::vector<Element> images;
    std::vector<Element> units;
    for (unsigned j = 0; j < f.degree(); ++j) {
        units.push_back(unit(f, j));
        images.push_back(map(units.back()));
    }
    const Matrix ker = left_kernel(coordinate_rows(f, images), PrimeField{f.p()});
    std::vector<Element> vecs;
    for (std::size_t i = 0; i < ker.rows(); ++i)
        vecs.push_back(prime_combination(f, ker.row(i), units));
    return span(f, vecs);
}

std::uint64_t Subspace::size() const noexcept
{
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < prime_dim(); ++i)
        s *= f_.p();
    return s;
}

Element Subspace::residual(Element x) const noexcept
{
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const unsigned d = digit(f_, x, pivots_[i]);
        if (d)
            x = f_.sub(x, f_.mul(Element{d}, rows_[i]));
    }
    return x;
}

bool Subspace::is_subspace_of(const Subspace& other) const noexcept
{
    if (!(f_ == other.f_))
        return false;
    for (Element r : rows_)
        if (!other.contains(r))
            return false;
    return true;
}

std::vector<Element> Subspace::enumerate(std::uint64_t budget) const
{
    const std::uint64_t total = size();
    if (total > budget)
        throw Error(ErrorCode::TooLarge, "subspace has " + std::to_string(total) + " elements, budget is " +
                                             std::to_string(budget));
    const auto& b = f_.subfield_elements();
    const std::size_t q = b.size();
    const std::size_t d = basis_.size();
    std::vector<std::vector<Element>> mults(d, std::vector<Element>(q));
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t i = 0; i < q; ++i)
            mults[k][i] = f_.mul(b[i], basis_[k]);

    std::vector<Element> out;
    out.reserve(total);
    std::vector<std::size_t> idx(d, 0);
    Element cur{0};
    for (std::uint64_t n = 0; n < total; ++n) {
        out.push_back(cur);
        // odometer, last coordinate fastest
        for (std::size_t pos = d; pos > 0; --pos) {
            const std::size_t k = pos - 1;
            const std::size_t old = idx[k];
            const std::size_t nxt = (old + 1) % q;
            idx[k] = nxt;
            cur = f_.add(f_.sub(cur, mults[k][old]), mults[k][nxt]);
            if (nxt != 0)
                break;
        }
    }
    return out;
}

Subspace sum(const Subspace& x, const Subspace& y)
{
    if (!(x.tower() == y.tower()))
        throw Error(ErrorCode::AmbientMismatch, "subspaces live in different fields");
    std::vector<Element> all(x.prime_basis());
    all.insert(all.end(), y.prime_basis().begin(), y.prime_basis().end());
    return Subspace::span(x.tower(), all);
}

Subspace intersect(const Subspace& x, const Subspace& y)
{
    if (!(x.tower() == y.tower()))
        throw Error(ErrorCode::AmbientMismatch, "subspaces live in different fields");
    const FieldTower& f = x.tower();
    const auto& rows = x.prime_basis();
    if (rows.empty())
        return x;
    std::vector<Element> res;
    for (Element r : rows)
        res.push_back(y.residual(r));
    const Matrix ker = left_kernel(coordinate_rows(f, res), PrimeField{f.p()});
    std::vector<Element> vecs;
    for (std::size_t i = 0; i < ker.rows(); ++i)
        vecs.push_back(prime_combination(f, ker.row(i), rows));
    return Subspace::span(f, vecs);
}

Subspace intersect(std::span<const Subspace> spaces)
{
    if (spaces.empty())
        throw Error(ErrorCode::ParamViolation, "intersect of an empty list");
    Subspace acc = spaces.front();
    for (std::size_t i = 1; i < spaces.size(); ++i)
        acc = intersect(acc, spaces[i]);
    return acc;
}

Subspace trace_kernel(const FieldTower& f)
{
    return Subspace::kernel(f, [&f](Element x) { return f.trace(x); });
}

Subspace scaled_trace_kernel(const FieldTower& f, Element beta)
{
    if (beta.is_zero())
        throw Error(ErrorCode::ZeroScalar, "scaled trace kernel needs beta != 0");
    return Subspace::kernel(f, [&f, beta](Element x) { return f.trace(f.mul(beta, x)); });
}

Subspace image(const FieldTower& f, const std::function<Element(Element)>& map)
{
    std::vector<Element> images;
    for (unsigned j = 0; j < f.degree(); ++j)
        images.push_back(map(unit(f, j)));
    return Subspace::span(f, images);
}

Subspace preimage(const std::function<Element(Element)>& map, const Subspace& w)
{
    const FieldTower& f = w.tower();
    Subspace pre = Subspace::kernel(f, [&](Element x) { return w.residual(map(x)); });
    const Subspace ker = Subspace::kernel(f, map);
    if (pre.prime_dim() != w.prime_dim() + ker.prime_dim())
        throw Error(ErrorCode::WNotInImage, "W is not contained in the image of the map");
    return pre;
}

Subspace preimage(const QPolynomial& map, const Subspace& w)
{
    const FieldTower& f = w.tower();
    return preimage([&](Element x) { return map.eval(f, x); }, w);
}

std::size_t rank_over_subfield(const FieldTower& f, std::span<const Element> xs)
{
    return Subspace::span(f, xs).dim();
}

VecSubspace::VecSubspace(const FieldTower& f, std::size_t m) : f_(f), m_(m), basis_(0, m) { }

VecSubspace VecSubspace::span(const FieldTower& f, std::size_t m, const Matrix& rows)
{
    VecSubspace out(f, m);
    if (rows.rows() == 0)
        return out;
    if (rows.cols() != m)
        throw Error(ErrorCode::AmbientMismatch, "vectors have the wrong length");
    Matrix r = rows;
    rref(r, TowerField(f));
    out.basis_ = r.rows() ? std::move(r) : Matrix(0, m);
    return out;
}

bool VecSubspace::contains(std::span<const Element> v) const
{
    if (v.size() != m_)
        throw Error(ErrorCode::AmbientMismatch, "vector has the wrong length");
    Matrix m = basis_;
    m.append_row(v);
    return rank(m, TowerField(f_)) == dim();
}

VecSubspace intersect(const VecSubspace& x, const VecSubspace& y)
{
    if (x.m_ != y.m_ || !(x.f_ == y.f_))
        throw Error(ErrorCode::AmbientMismatch, "subspaces of different ambient spaces");
    const TowerField k(x.f_);
    if (x.dim() == 0 || y.dim() == 0)
        return VecSubspace(x.f_, x.m_);
    Matrix stacked(0, x.m_);
    for (std::size_t i = 0; i < x.dim(); ++i)
        stacked.append_row(x.basis_.row(i));
    for (std::size_t i = 0; i < y.dim(); ++i) {
        std::vector<Element> r(y.basis_.row(i).begin(), y.basis_.row(i).end());
        for (auto& e : r)
            e = k.neg(e);
        stacked.append_row(r);
    }
    const Matrix ker = left_kernel(stacked, k);
    Matrix vecs(0, x.m_);
    for (std::size_t i = 0; i < ker.rows(); ++i) {
        std::vector<Element> v(x.m_, Element{0});
        for (std::size_t j = 0; j < x.dim(); ++j)
            for (std::size_t c = 0; c < x.m_; ++c)
                v[c] = k.add(v[c], k.mul(ker(i, j), x.basis_(j, c)));
        vecs.append_row(v);
    }
    return VecSubspace::span(x.f_, x.m_, vecs);
}

VecSubspace sum(const VecSubspace& x, const VecSubspace& y)
{
    if (x.m_ != y.m_ || !(x.f_ == y.f_))
        throw Error(ErrorCode::AmbientMismatch, "subspaces of different ambient spaces");
    Matrix stacked(0, x.m_);
    for (std::size_t i = 0; i < x.dim(); ++i)
        stacked.append_row(x.basis_.row(i));
    for (std::size_t i = 0; i < y.dim(); ++i)
        stacked.append_row(y.basis_.row(i));
    return VecSubspace::span(x.f_, x.m_, stacked);
}

} // namespace rsrepair
