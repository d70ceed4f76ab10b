/**************************************************************************
 * linalg.hpp
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

// Dense Gaussian elimination over a scalar field given as a policy object.
// Two policies exist: PrimeField (GF(p) residues, used for subspaces of F
// held over the prime field) and TowerField (arithmetic of F itself, used
// for matrices over B and for the Moore system over F).

#include "rsrepair/error.hpp"
#include "rsrepair/gf.hpp"

#include <cassert>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace rsrepair {

struct PrimeField {
    unsigned p;

    Element zero() const noexcept { return Element{0}; }
    Element one() const noexcept { return Element{1}; }
    Element add(Element x, Element y) const noexcept { return Element{(x.value() + y.value()) % p}; }
    Element sub(Element x, Element y) const noexcept { return Element{(x.value() + p - y.value()) % p}; }
    Element neg(Element x) const noexcept { return Element{(p - x.value()) % p}; }
    Element mul(Element x, Element y) const noexcept { return Element{x.value() * y.value() % p}; }
    Element inv(Element x) const
    {
        if (x.is_zero())
            throw Error(ErrorCode::ZeroScalar, "inverse of zero");
        unsigned r = 1, b = x.value(), e = p - 2;
        while (e) {
            if (e & 1)
                r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return Element{r};
    }
};

struct TowerField {
    const FieldTower* f;

    explicit TowerField(const FieldTower& tower) : f(&tower) { }

    Element zero() const noexcept { return Element{0}; }
    Element one() const noexcept { return Element{1}; }
    Element add(Element x, Element y) const noexcept { return f->add(x, y); }
    Element sub(Element x, Element y) const noexcept { return f->sub(x, y); }
    Element neg(Element x) const noexcept { return f->neg(x); }
    Element mul(Element x, Element y) const noexcept { return f->mul(x, y); }
    Element inv(Element x) const { return f->inv(x); }
};

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) { }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = Element{1};
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Element& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    Element operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

    std::span<Element> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }
    std::span<const Element> row(std::size_t i) const noexcept { return {data_.data() + i * cols_, cols_}; }

    void append_row(std::span<const Element> r)
    {
        if (rows_ == 0 && cols_ == 0)
            cols_ = r.size();
        assert(r.size() == cols_);
        data_.insert(data_.end(), r.begin(), r.end());
        ++rows_;
    }

    void swap_rows(std::size_t i, std::size_t j) noexcept
    {
        if (i == j)
            return;
        for (std::size_t c = 0; c < cols_; ++c)
            std::swap(data_[i * cols_ + c], data_[j * cols_ + c]);
    }

    void truncate_rows(std::size_t n)
    {
        rows_ = std::min(rows_, n);
        data_.resize(rows_ * cols_);
    }

    Matrix transposed() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero_row(std::size_t i) const noexcept
    {
        for (Element e : row(i))
            if (!e.is_zero())
                return false;
        return true;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Element> data_;
};

/// Number of nonzero columns.
inline std::size_t nonzero_columns(const Matrix& m)
{
    std::size_t count = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (!m(i, j).is_zero()) {
                ++count;
                break;
            }
        }
    }
    return count;
}

/**
 * In-place reduced row echelon form. Zero rows are moved to the bottom and
 * dropped; the returned vector holds the pivot column of each kept row.
 */
template <class K>
std::vector<std::size_t> rref(Matrix& m, const K& k)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t sel = r;
        while (sel < m.rows() && m(sel, c).is_zero())
            ++sel;
        if (sel == m.rows())
            continue;
        m.swap_rows(r, sel);
        const Element s = k.inv(m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j)
            m(r, j) = k.mul(m(r, j), s);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero())
                continue;
            const Element f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m(i, j) = k.sub(m(i, j), k.mul(f, m(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    m.truncate_rows(r);
    return pivots;
}

template <class K>
std::size_t rank(Matrix m, const K& k)
{
    return rref(m, k).size();
}

/// Basis (as rows) of {x : m x^T = 0}.
template <class K>
Matrix right_kernel(Matrix m, const K& k)
{
    const std::size_t n = m.cols();
    const auto pivots = rref(m, k);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots)
        is_pivot[c] = true;
    Matrix out(0, n);
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<Element> v(n, k.zero());
        v[f] = k.one();
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = k.neg(m(r, f));
        out.append_row(v);
    }
    return out;
}

/// Basis (as rows) of {u : u m = 0}.
template <class K>
Matrix left_kernel(const Matrix& m, const K& k)
{
    Matrix out = right_kernel(m.transposed(), k);
    if (out.rows() == 0)
        return Matrix(0, m.rows());
    return out;
}

template <class K>
Matrix multiply(const Matrix& x, const Matrix& y, const K& k)
{
    assert(x.cols() == y.rows());
    Matrix out(x.rows(), y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t l = 0; l < x.cols(); ++l) {
            const Element a = x(i, l);
            if (a.is_zero())
                continue;
            for (std::size_t j = 0; j < y.cols(); ++j)
                out(i, j) = k.add(out(i, j), k.mul(a, y(l, j)));
        }
    return out;
}

template <class K>
std::vector<Element> multiply(const Matrix& x, std::span<const Element> v, const K& k)
{
    assert(x.cols() == v.size());
    std::vector<Element> out(x.rows(), k.zero());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            out[i] = k.add(out[i], k.mul(x(i, j), v[j]));
    return out;
}

template <class K>
std::optional<Matrix> inverse(const Matrix& m, const K& k)
{
    const std::size_t n = m.rows();
    if (n != m.cols())
        return std::nullopt;
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = k.one();
    }
    const auto pivots = rref(aug, k);
    if (pivots.size() < n || pivots[n - 1] != n - 1)
        return std::nullopt;
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out(i, j) = aug(i, n + j);
    return out;
}

/// Solves m x = b for square invertible m.
template <class K>
std::optional<std::vector<Element>> solve(const Matrix& m, std::span<const Element> b, const K& k)
{
    auto inv = inverse(m, k);
    if (!inv)
        return std::nullopt;
    return multiply(*inv, b, k);
}

} // namespace rsrepair
