/**************************************************************************
 * report.cpp
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

#include "rsrepair/report.hpp"

#include "rsrepair/constructions.hpp"
#include "rsrepair/error.hpp"

#include <random>
#include <sstream>

namespace rsrepair {

namespace {

// Bundled reference rows (published values for schemes not implemented here).
const std::vector<std::uint64_t> kTraceRepairBandwidth{45, 315, 1785, 9207, 45045, 212979};
const std::vector<std::uint64_t> kPriorIoSchemeBandwidth{44, 314, 1784, 9206, 45044, 212978};
const std::vector<std::uint64_t> kTraceRepairIo{56, 372, 2032, 10220, 49128, 229348};
const std::vector<std::uint64_t> kPriorIoSchemeIo{44, 314, 1784, 9206, 45044, 212978};
const std::vector<std::string> kPriorIoSchemeRatio{"94.4%", "92.9%", "92.7%", "84.8%", "85.8%", "81.0%"};

const std::vector<unsigned> kTable3Ells{4, 6, 8, 10, 12, 14};

struct Table4Column {
    unsigned ell, d, r, s, m;
};
const std::vector<Table4Column> kTable4{
    {4, 3, 2, 0, 2}, {6, 4, 2, 0, 3}, {8, 5, 2, 0, 4}, {6, 5, 3, 1, 3}, {8, 6, 3, 1, 4}, {8, 7, 5, 2, 4},
};

std::vector<std::string> to_cells(const std::vector<std::uint64_t>& v)
{
    std::vector<std::string> out;
    for (auto x : v)
        out.push_back(std::to_string(x));
    return out;
}

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace

std::optional<TableKind> parse_table_kind(std::string_view s) noexcept
{
    if (s == "3a")
        return TableKind::Table3Bandwidth;
    if (s == "3b")
        return TableKind::Table3Io;
    if (s == "4")
        return TableKind::Table4;
    return std::nullopt;
}

std::optional<TableFormat> parse_table_format(std::string_view s) noexcept
{
    if (s == "csv")
        return TableFormat::Csv;
    if (s == "md" || s == "markdown")
        return TableFormat::Markdown;
    return std::nullopt;
}

std::string percent_one_decimal(std::uint64_t num, std::uint64_t den)
{
    if (den == 0)
        throw Error(ErrorCode::ParamViolation, "percentage of a zero denominator");
    // tenths of a percent, rounded half up
    const std::uint64_t tenths = (2 * 1000 * num + den) / (2 * den);
    return std::to_string(tenths / 10) + "." + std::to_string(tenths % 10) + "%";
}

Table build_table(TableKind kind, std::string_view c1_theta)
{
    Table t;
    if (kind == TableKind::Table4) {
        t.title = "I/O cost ratio rho = gamma_IO / ((n - r) ell), q = 2";
        std::vector<std::string> ratios;
        for (const auto& c : kTable4) {
            t.columns.push_back("(2^" + std::to_string(c.d) + "," + std::to_string(c.r) + ") ell=" +
                                std::to_string(c.ell));
            const Construction2 cons = construction2({2, c.ell, c.d, c.s, c.m, c.r});
            const auto met = metrics_direct(cons.scheme);
            const std::uint64_t n = cons.scheme.code().n();
            ratios.push_back(percent_one_decimal(met.io_cost, (n - c.r) * c.ell));
        }
        t.rows.push_back({"prior I/O scheme, ell = log n (reference values)", kPriorIoSchemeRatio, false});
        t.rows.push_back({"construction 2 (computed)", std::move(ratios), true});
        return t;
    }

    const bool bandwidth = kind == TableKind::Table3Bandwidth;
    t.title = std::string(bandwidth ? "Repair bandwidth" : "I/O cost") + " in bits, RS(F_{2^ell}, 2^ell - 3)";
    const auto strategy = parse_theta_strategy(c1_theta);
    if (!strategy)
        throw Error(ErrorCode::ParamViolation, "unknown theta strategy '" + std::string(c1_theta) + "'");
    std::vector<std::uint64_t> values;
    for (unsigned ell : kTable3Ells) {
        t.columns.push_back("2^" + std::to_string(ell));
        const ThetaStrategy st = (*strategy == ThetaStrategy::WorkedExample && ell != 4) ? ThetaStrategy::Search
                                                                                        : *strategy;
        const auto met = metrics_direct(construction1(ell, st).scheme);
        values.push_back(bandwidth ? met.bandwidth : met.io_cost);
    }
    t.rows.push_back({"trace repair (reference values)", to_cells(bandwidth ? kTraceRepairBandwidth : kTraceRepairIo),
                      false});
    t.rows.push_back({"prior I/O scheme (reference values)",
                      to_cells(bandwidth ? kPriorIoSchemeBandwidth : kPriorIoSchemeIo), false});
    t.rows.push_back({"construction 1 (computed)", to_cells(values), true});
    return t;
}

std::string render_table(const Table& t, TableFormat format)
{
    std::ostringstream out;
    if (format == TableFormat::Csv) {
        out << "scheme";
        for (const auto& c : t.columns)
            out << ',' << csv_escape(c);
        out << '\n';
        for (const auto& r : t.rows) {
            out << csv_escape(r.label);
            for (const auto& c : r.cells)
                out << ',' << csv_escape(c);
            out << '\n';
        }
        return out.str();
    }
    out << "**" << t.title << "**\n\n| scheme |";
    for (const auto& c : t.columns)
        out << ' ' << c << " |";
    out << "\n|---|";
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        out << "---:|";
    out << '\n';
    for (const auto& r : t.rows) {
        out << "| " << r.label << " |";
        for (const auto& c : r.cells)
            out << ' ' << c << " |";
        out << '\n';
    }
    return out.str();
}

SimulationReport run_simulation(const RepairScheme& s, std::size_t trials, std::uint64_t seed)
{
    SimulationReport rep;
    rep.trials = trials;
    const auto met = metrics_direct(s);
    rep.io_cost = met.io_cost;
    rep.bandwidth = met.bandwidth;
    std::mt19937_64 seeds(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        auto word = s.code().random_codeword(seeds());
        const Element erased = word[s.target()];
        word[s.target()] = Element{0};
        AccessCounter counter;
        const Element got = repair_node(s, word, counter);
        rep.successes += got == erased;
        const auto acc = counter.total_accessed();
        const auto tx = counter.total_transmitted();
        if (t == 0) {
            rep.accessed_per_trial = acc;
            rep.transmitted_per_trial = tx;
        } else if (acc != rep.accessed_per_trial || tx != rep.transmitted_per_trial) {
            rep.counts_stable = false;
        }
    }
    return rep;
}

} // namespace rsrepair
