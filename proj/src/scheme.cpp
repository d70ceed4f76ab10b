/**************************************************************************
 * scheme.cpp
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

#include "rsrepair/scheme.hpp"

#include "rsrepair/error.hpp"

#include <string>

namespace rsrepair {

RepairScheme::RepairScheme(RSCode code, BasisPair basis, std::vector<Polynomial> polys, std::size_t target)
    : code_(std::move(code)), basis_(std::move(basis)), polys_(std::move(polys)), target_(target)
{
    const FieldTower& f = code_.tower();
    if (!(basis_.tower() == f))
        throw Error(ErrorCode::InvalidScheme, "basis and code live in different fields");
    if (polys_.size() != f.ell())
        throw Error(ErrorCode::InvalidScheme, "a repair scheme needs exactly ell=" + std::to_string(f.ell()) +
                                                  " polynomials, got " + std::to_string(polys_.size()));
    if (target_ >= code_.n())
        throw Error(ErrorCode::InvalidScheme, "target node " + std::to_string(target_ + 1) + " is out of range");
    for (std::size_t j = 0; j < polys_.size(); ++j) {
        for (Element c : polys_[j].coeffs())
            if (!f.contains(c))
                throw Error(ErrorCode::InvalidScheme, "coefficient of g_" + std::to_string(j + 1) + " is not in F");
        if (polys_[j].degree() >= static_cast<int>(code_.r()))
            throw Error(ErrorCode::InvalidScheme,
                        "g_" + std::to_string(j + 1) + " has degree " + std::to_string(polys_[j].degree()) +
                            " but dual codewords need degree < r=" + std::to_string(code_.r()));
    }
    if (rank(repair_matrix(target_), TowerField(f)) != f.ell())
        throw Error(ErrorCode::InvalidScheme,
                    "repair condition fails: the values g_j(alpha) at the target do not span F over B");
}

Matrix RepairScheme::repair_matrix_at(Element alpha) const
{
    const std::size_t ell = polys_.size();
    Matrix w(ell, ell);
    for (std::size_t j = 0; j < ell; ++j) {
        const auto row = basis_.dual_vectorize(polys_[j].eval(tower(), alpha));
        for (std::size_t s = 0; s < ell; ++s)
            w(j, s) = row[s];
    }
    return w;
}

Matrix RepairScheme::repair_matrix(std::size_t node) const { return repair_matrix_at(code_.points().at(node)); }

std::string_view to_string(MetricMethod m) noexcept
{
    switch (m) {
    case MetricMethod::Direct: return "direct";
    case MetricMethod::WeightFormula: return "weight";
    case MetricMethod::ExpSum: return "expsum";
    }
    return "?";
}

std::optional<MetricMethod> parse_metric_method(std::string_view s) noexcept
{
    if (s == "direct")
        return MetricMethod::Direct;
    if (s == "weight")
        return MetricMethod::WeightFormula;
    if (s == "expsum")
        return MetricMethod::ExpSum;
    return std::nullopt;
}

namespace {

MetricsReport collect(const RepairScheme& s, MetricMethod method)
{
    const TowerField k(s.tower());
    MetricsReport rep;
    rep.method = method;
    rep.per_node.resize(s.code().n());
    for (std::size_t i = 0; i < s.code().n(); ++i) {
        const Matrix w = s.repair_matrix(i);
        if (i == s.target()) {
            if (rank(w, k) != s.ell())
                throw Error(ErrorCode::InvalidScheme, "repair matrix at the target is singular");
            continue;
        }
        NodeMetrics nm;
        nm.nz = method == MetricMethod::WeightFormula ? nz_via_weight(s.tower(), w) : nonzero_columns(w);
        nm.rank = rank(w, k);
        rep.per_node[i] = nm;
        rep.io_cost += nm.nz;
        rep.bandwidth += nm.rank;
    }
    return rep;
}

} // namespace

MetricsReport metrics_direct(const RepairScheme& s) { return collect(s, MetricMethod::Direct); }

MetricsReport metrics_weight(const RepairScheme& s) { return collect(s, MetricMethod::WeightFormula); }

std::uint64_t nz_via_weight(const FieldTower& f, const Matrix& g)
{
    const std::size_t rows = g.rows();
    const std::size_t cols = g.cols();
    if (rows == 0)
        return 0;
    const auto& b = f.subfield_elements();
    const std::uint64_t q = b.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < rows; ++i) {
        total *= q;
        if (total > kEnumerationBudget)
            throw Error(ErrorCode::TooLarge, "weight formula would enumerate more than the budget");
    }
    // Odometer over u in B^rows, keeping uG up to date.
    std::vector<std::size_t> idx(rows, 0);
    std::vector<Element> ug(cols, Element{0});
    std::uint64_t weight_sum = 0;
    for (std::uint64_t n = 0; n < total; ++n) {
        for (Element e : ug)
            weight_sum += !e.is_zero();
        for (std::size_t pos = rows; pos > 0; --pos) {
            const std::size_t r = pos - 1;
            const std::size_t old = idx[r];
            const std::size_t nxt = (old + 1) % q;
            idx[r] = nxt;
            const Element delta = f.sub(b[nxt], b[old]);
            for (std::size_t c = 0; c < cols; ++c)
                ug[c] = f.add(ug[c], f.mul(delta, g(r, c)));
            if (nxt != 0)
                break;
        }
    }
    const std::uint64_t denom = (total / q) * (q - 1);
    if (weight_sum % denom != 0)
        throw Error(ErrorCode::Internal, "weight sum is not divisible by q^(k-1)(q-1)");
    return weight_sum / denom;
}

bool is_subfield_matrix(const FieldTower& f, const Matrix& m)
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (Element e : m.row(i))
            if (!f.in_subfield(e))
                return false;
    return true;
}

RepairScheme transform(const RepairScheme& s, const Matrix& m)
{
    const FieldTower& f = s.tower();
    const std::size_t ell = s.ell();
    if (m.rows() != ell || m.cols() != ell || !is_subfield_matrix(f, m) || rank(m, TowerField(f)) != ell)
        throw Error(ErrorCode::SingularMatrix, "transform must be an invertible ell x ell matrix over B");
    std::vector<Polynomial> polys;
    for (std::size_t i = 0; i < ell; ++i)
        polys.push_back(linear_combination(f, m.row(i), s.polys()));
    return RepairScheme(s.code(), s.basis(), std::move(polys), s.target());
}

NormalForm normalize(const RepairScheme& s)
{
    const FieldTower& f = s.tower();
    const TowerField k(f);
    const std::size_t ell = s.ell();
    const std::size_t r = s.code().r();

    // Row j: B-coordinates of the nonconstant coefficients of g_j.
    Matrix coeffs(ell, (r > 1 ? r - 1 : 0) * ell);
    for (std::size_t j = 0; j < ell; ++j)
        for (std::size_t e = 1; e < r; ++e) {
            const auto v = s.basis().vectorize(s.polys()[j].coeff(e));
            for (std::size_t c = 0; c < ell; ++c)
                coeffs(j, (e - 1) * ell + c) = v[c];
        }
    Matrix u = coeffs.cols() ? left_kernel(coeffs, k) : Matrix::identity(ell);
    rref(u, k);
    const std::size_t dim_u = u.rows();
    const std::size_t m = ell - dim_u;

    // Extend a basis of U to B^ell with unit vectors; extension rows go first.
    Matrix span = u;
    Matrix ext(0, ell);
    for (std::size_t i = 0; i < ell && ext.rows() < m; ++i) {
        std::vector<Element> e(ell, Element{0});
        e[i] = f.one();
        Matrix trial = span;
        trial.append_row(e);
        if (rank(trial, k) > span.rows()) {
            span = std::move(trial);
            ext.append_row(e);
        }
    }
    Matrix mt(0, ell);
    for (std::size_t i = 0; i < ext.rows(); ++i)
        mt.append_row(ext.row(i));
    for (std::size_t i = 0; i < u.rows(); ++i)
        mt.append_row(u.row(i));
    if (mt.rows() != ell)
        throw Error(ErrorCode::Internal, "basis extension failed");

    RepairScheme out = transform(s, mt);
    std::vector<bool> covered(ell, false);
    for (std::size_t j = m; j < ell; ++j) {
        const Polynomial& g = out.polys()[j];
        if (!g.is_constant())
            throw Error(ErrorCode::Internal, "normalized tail polynomial is not constant");
        const auto v = s.basis().dual_vectorize(g.coeff(0));
        for (std::size_t c = 0; c < ell; ++c)
            covered[c] = covered[c] || !v[c].is_zero();
    }
    std::vector<std::size_t> support;
    for (std::size_t c = 0; c < ell; ++c)
        if (!covered[c])
            support.push_back(c);
    if (support.size() > m)
        throw Error(ErrorCode::InvalidScheme, "normalized form has t > m");
    const std::size_t t = support.size();
    return NormalForm{std::move(out), m, t, std::move(support), std::move(mt)};
}

Matrix reduced_repair_matrix(const NormalForm& nf, std::size_t node)
{
    const Matrix w = nf.scheme.repair_matrix(node);
    Matrix out(nf.m, nf.t);
    for (std::size_t j = 0; j < nf.m; ++j)
        for (std::size_t c = 0; c < nf.t; ++c)
            out(j, c) = w(j, nf.support[c]);
    return out;
}

std::uint64_t io_cost_normalized(const NormalForm& nf)
{
    const std::uint64_t n = nf.scheme.code().n();
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < n; ++i)
        acc += nonzero_columns(reduced_repair_matrix(nf, i));
    return (n - 1) * nf.scheme.ell() + acc - n * nf.t;
}

std::uint64_t AccessCounter::total_accessed() const noexcept
{
    std::uint64_t s = 0;
    for (const auto& a : accessed)
        s += a.size();
    return s;
}

std::uint64_t AccessCounter::total_transmitted() const noexcept
{
    std::uint64_t s = 0;
    for (std::size_t t : transmitted)
        s += t;
    return s;
}

Element repair_node(const RepairScheme& s, std::span<const Element> codeword, AccessCounter& counter)
{
    const FieldTower& f = s.tower();
    const TowerField k(f);
    const std::size_t ell = s.ell();
    const std::size_t n = s.code().n();
    if (codeword.size() != n)
        throw Error(ErrorCode::ParamViolation, "codeword length differs from n");
    counter.accessed.assign(n, {});
    counter.transmitted.assign(n, 0);

    std::vector<Element> rhs(ell, Element{0});
    for (std::size_t i = 0; i < n; ++i) {
        if (i == s.target())
            continue;
        const Matrix w = s.repair_matrix(i);

        // Helper side: read the needed coordinates, send a row basis of W_i x.
        std::vector<Element> x(ell, Element{0});
        const auto full = s.basis().vectorize(codeword[i]);
        for (std::size_t c = 0; c < ell; ++c) {
            bool nz = false;
            for (std::size_t j = 0; j < ell && !nz; ++j)
                nz = !w(j, c).is_zero();
            if (nz) {
                x[c] = full[c];
                counter.accessed[i].push_back(c);
            }
        }
        Matrix basis_rows(0, ell);
        std::vector<std::size_t> basis_idx;
        for (std::size_t j = 0; j < ell; ++j) {
            Matrix trial = basis_rows;
            trial.append_row(w.row(j));
            if (rank(trial, k) > basis_rows.rows()) {
                basis_rows = std::move(trial);
                basis_idx.push_back(j);
            }
        }
        const auto sent = multiply(basis_rows, std::span<const Element>(x), k);
        counter.transmitted[i] = sent.size();

        // Receiver side: expand each row of W_i x from the transmitted values.
        for (std::size_t j = 0; j < ell; ++j) {
            if (w.is_zero_row(j))
                continue;
            Matrix stacked = basis_rows;
            stacked.append_row(w.row(j));
            const Matrix ker = left_kernel(stacked, k);
            std::optional<std::size_t> pick;
            for (std::size_t v = 0; v < ker.rows() && !pick; ++v)
                if (!ker(v, basis_rows.rows()).is_zero())
                    pick = v;
            if (!pick)
                throw Error(ErrorCode::Internal, "row is not in the span of the transmitted rows");
            const Element scale = k.neg(k.inv(ker(*pick, basis_rows.rows())));
            Element y{0};
            for (std::size_t b = 0; b < sent.size(); ++b)
                y = k.add(y, k.mul(k.mul(scale, ker(*pick, b)), sent[b]));
            rhs[j] = k.sub(rhs[j], y);
        }
    }
    const auto sol = solve(s.repair_matrix(s.target()), std::span<const Element>(rhs), k);
    if (!sol)
        throw Error(ErrorCode::SingularRepairMatrix, "repair matrix at the target is singular");
    return s.basis().devectorize(*sol);
}

} // namespace rsrepair
