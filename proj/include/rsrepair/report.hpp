/**************************************************************************
 * report.hpp
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

#include "rsrepair/scheme.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rsrepair {

enum class TableKind { Table3Bandwidth, Table3Io, Table4 };
enum class TableFormat { Csv, Markdown };

std::optional<TableKind> parse_table_kind(std::string_view s) noexcept; ///< "3a", "3b", "4"
std::optional<TableFormat> parse_table_format(std::string_view s) noexcept; ///< "csv", "md"

struct TableRow {
    std::string label;
    std::vector<std::string> cells;
    bool computed = false; ///< false for bundled reference literals
};

struct Table {
    std::string title;
    std::vector<std::string> columns;
    std::vector<TableRow> rows;
};

/**
 * Rows for Construction 1 (3a, 3b) and Construction 2 (4) are computed live;
 * prior-work rows are bundled literals and labelled as such. Construction 1
 * uses the Conway theta strategy; pass another strategy name through
 * `c1_theta` to compare.
 */
Table build_table(TableKind kind, std::string_view c1_theta = "conway");
std::string render_table(const Table& t, TableFormat format);

/// Percent with one decimal, rounded half up, from an exact fraction.
std::string percent_one_decimal(std::uint64_t num, std::uint64_t den);

struct SimulationReport {
    std::size_t trials = 0;
    std::size_t successes = 0;
    std::uint64_t accessed_per_trial = 0;    ///< identical in every trial
    std::uint64_t transmitted_per_trial = 0; ///< identical in every trial
    std::uint64_t io_cost = 0;               ///< from metrics_direct
    std::uint64_t bandwidth = 0;             ///< from metrics_direct
    bool counts_stable = true;               ///< tallies equal across trials
    bool accessed_matches() const noexcept { return trials == 0 || accessed_per_trial == io_cost; }
    bool transmitted_matches() const noexcept { return trials == 0 || transmitted_per_trial == bandwidth; }
    bool ok() const noexcept
    {
        return successes == trials && counts_stable && accessed_matches() && transmitted_matches();
    }
};

/// Encodes `trials` seeded random codewords, erases the target and repairs it.
SimulationReport run_simulation(const RepairScheme& s, std::size_t trials, std::uint64_t seed);

} // namespace rsrepair
