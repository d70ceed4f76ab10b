/**************************************************************************
 * scheme.hpp
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

#include "rsrepair/basis.hpp"
#include "rsrepair/linalg.hpp"
#include "rsrepair/poly.hpp"
#include "rsrepair/rs.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace rsrepair {

/**
 * A linear repair scheme for one node of RS(A, k): ell dual codewords
 * g_1..g_ell (polynomials of degree < r) whose values at the target point
 * span F over B. Construction validates both conditions and throws
 * InvalidScheme otherwise.
 */
class RepairScheme {
public:
    RepairScheme(RSCode code, BasisPair basis, std::vector<Polynomial> polys, std::size_t target = 0);

    const RSCode& code() const noexcept { return code_; }
    const BasisPair& basis() const noexcept { return basis_; }
    const FieldTower& tower() const noexcept { return code_.tower(); }
    const std::vector<Polynomial>& polys() const noexcept { return polys_; }
    std::size_t target() const noexcept { return target_; }
    std::size_t ell() const noexcept { return polys_.size(); }

    /// W_i with entry (j, s) = Tr(g_j(alpha_i) beta_s).
    Matrix repair_matrix(std::size_t node) const;
    Matrix repair_matrix_at(Element alpha) const;

private:
    RSCode code_;
    BasisPair basis_;
    std::vector<Polynomial> polys_;
    std::size_t target_;
};

enum class MetricMethod { Direct, WeightFormula, ExpSum };

std::string_view to_string(MetricMethod m) noexcept;
std::optional<MetricMethod> parse_metric_method(std::string_view s) noexcept;

struct NodeMetrics {
    std::size_t nz = 0;
    std::size_t rank = 0;
};

struct MetricsReport {
    MetricMethod method = MetricMethod::Direct;
    /// Indexed by node; the target's entry is left at zero. Empty for ExpSum.
    std::vector<NodeMetrics> per_node;
    std::uint64_t io_cost = 0;
    std::uint64_t bandwidth = 0;
};

/// nz and rank of every helper's repair matrix.
MetricsReport metrics_direct(const RepairScheme& s);
/// As metrics_direct, with every nz obtained from the weight formula.
MetricsReport metrics_weight(const RepairScheme& s);

/**
 * Nonzero column count of a k x c matrix over B from codeword weights:
 * nz(G) = sum_{u in B^k} wt(uG) / (q^(k-1)(q-1)). Enumerates all q^k
 * vectors u; throws TooLarge beyond the enumeration budget.
 */
std::uint64_t nz_via_weight(const FieldTower& f, const Matrix& g);

/**
 * An equivalent scheme in (m, t)-normalized form: g_1..g_m have no
 * nonconstant B-combination that is constant, g_{m+1}..g_ell are constants
 * omega_j, and the dual coordinates of the omega_j jointly cover every
 * index outside `support` (|support| = t).
 */
struct NormalForm {
    RepairScheme scheme;
    std::size_t m = 0;
    std::size_t t = 0;
    std::vector<std::size_t> support; ///< T, sorted, 0-based
    Matrix transform;                 ///< scheme.polys = transform * original polys
};

NormalForm normalize(const RepairScheme& s);

/// Rows 0..m-1 and the columns in T of the normalized repair matrix at a node.
Matrix reduced_repair_matrix(const NormalForm& nf, std::size_t node);

/// (n-1)ell - n t + sum_i nz(W-hat_i), evaluated directly.
std::uint64_t io_cost_normalized(const NormalForm& nf);

/// Scheme with polynomials M * (g_1..g_ell); throws SingularMatrix unless M is invertible over B.
RepairScheme transform(const RepairScheme& s, const Matrix& m);

/// Per-helper bookkeeping of a single repair.
struct AccessCounter {
    std::vector<std::vector<std::size_t>> accessed; ///< subsymbol positions read at each node
    std::vector<std::size_t> transmitted;           ///< subsymbols sent by each node

    std::uint64_t total_accessed() const noexcept;
    std::uint64_t total_transmitted() const noexcept;
};

/**
 * Recovers the target symbol from the other n-1 symbols. Each helper i
 * reads only the coordinates of Phi(c_i) in the nonzero columns of W_i and
 * transmits rank(W_i) traces (a row basis of W_i Phi(c_i)^T); the
 * receiver expands them and solves W_{i*} x = -sum_i W_i Phi(c_i)^T.
 */
Element repair_node(const RepairScheme& s, std::span<const Element> codeword, AccessCounter& counter);

/// True when every entry lies in B.
bool is_subfield_matrix(const FieldTower& f, const Matrix& m);

} // namespace rsrepair
