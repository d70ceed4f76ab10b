/**************************************************************************
 * test_io.cpp
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

// Scheme files, table rendering and the simulation report.

#include "rsrepair/constructions.hpp"
#include "rsrepair/error.hpp"
#include "rsrepair/report.hpp"
#include "rsrepair/serialize.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace rsrepair;

namespace {

void expect_same_scheme(const RepairScheme& a, const RepairScheme& b)
{
    EXPECT_EQ(a.tower(), b.tower());
    EXPECT_EQ(a.basis(), b.basis());
    EXPECT_EQ(a.code().points(), b.code().points());
    EXPECT_EQ(a.code().k(), b.code().k());
    EXPECT_EQ(a.target(), b.target());
    ASSERT_EQ(a.polys().size(), b.polys().size());
    for (std::size_t j = 0; j < a.polys().size(); ++j)
        EXPECT_EQ(a.polys()[j], b.polys()[j]);
}

ErrorCode code_of(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::Internal;
}

} // namespace

TEST(Serialize, SchemeRoundTrip)
{
    const std::vector<RepairScheme> schemes{construction1(4, ThetaStrategy::WorkedExample).scheme,
                                            construction1(6, ThetaStrategy::Conway).scheme,
                                            construction2({2, 6, 5, 1, 3, 3}).scheme,
                                            construction2({4, 2, 2, 0, 1, 2}).scheme};
    for (const auto& s : schemes) {
        const Json j = scheme_to_json(s, Json{{"note", "x"}});
        EXPECT_EQ(j.at("target"), 1);
        EXPECT_EQ(j.at("meta").at("note"), "x");
        expect_same_scheme(scheme_from_json(j), s);
        // and through text
        expect_same_scheme(scheme_from_json(Json::parse(j.dump())), s);
    }
}

TEST(Serialize, FileRoundTrip)
{
    const auto s = construction2({2, 4, 3, 0, 2, 2}).scheme;
    const auto path = std::filesystem::temp_directory_path() / "rsrepair_io_test.json";
    save_json(path, scheme_to_json(s));
    expect_same_scheme(load_scheme(path), s);
    std::filesystem::remove(path);
    EXPECT_EQ(code_of([] { load_scheme("/nonexistent/scheme.json"); }), ErrorCode::Parse);
}

TEST(Serialize, ElementsAndFields)
{
    const FieldTower f = FieldTower::create(3, 1, 2);
    const Element x{7}; // 1 + 2x
    EXPECT_EQ(element_to_json(f, x), Json::parse("[1,2]"));
    EXPECT_EQ(element_from_json(f, Json::parse("[1,2]")), x);
    EXPECT_EQ(field_from_json(field_to_json(f)), f);
    EXPECT_EQ(code_of([&] { element_from_json(f, Json::parse("[1,2,0]")); }), ErrorCode::Parse);
    EXPECT_EQ(code_of([&] { element_from_json(f, Json::parse("[3,0]")); }), ErrorCode::Parse);
    const Subspace a = Subspace::span(f, std::vector<Element>{x});
    EXPECT_EQ(subspace_from_json(f, subspace_to_json(a)), a);
}

TEST(Serialize, RejectsBrokenFiles)
{
    const auto s = construction2({2, 4, 3, 0, 2, 2}).scheme;
    const Json good = scheme_to_json(s);

    Json missing = good;
    missing.erase("basis");
    EXPECT_EQ(code_of([&] { scheme_from_json(missing); }), ErrorCode::Parse);

    Json high = good; // a third coefficient makes some g_j reach degree r
    high["polys"][0].push_back(Json::parse("[1,0,0,0]"));
    try {
        scheme_from_json(high);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidScheme);
        EXPECT_NE(std::string(e.what()).find("degree"), std::string::npos);
    }

    Json gamma = good;
    gamma["basis"]["gamma"][0] = gamma["basis"]["gamma"][1];
    EXPECT_EQ(code_of([&] { scheme_from_json(gamma); }), ErrorCode::Parse);

    Json target = good;
    target["target"] = 0;
    EXPECT_EQ(code_of([&] { scheme_from_json(target); }), ErrorCode::Parse);
}

TEST(Report, PercentRoundsHalfUp)
{
    EXPECT_EQ(percent_one_decimal(20, 24), "83.3%");
    EXPECT_EQ(percent_one_decimal(66, 84), "78.6%");
    EXPECT_EQ(percent_one_decimal(1, 8), "12.5%");
    EXPECT_EQ(percent_one_decimal(1, 16), "6.3%");   // 6.25
    EXPECT_EQ(percent_one_decimal(1, 1600), "0.1%"); // 0.0625
    EXPECT_EQ(percent_one_decimal(1, 1), "100.0%");
    EXPECT_THROW(percent_one_decimal(1, 0), Error);
}

TEST(Report, TableRows)
{
    const Table io = build_table(TableKind::Table3Io);
    ASSERT_EQ(io.rows.size(), 3u);
    EXPECT_EQ(io.rows[2].cells, (std::vector<std::string>{"44", "314", "1784", "9206", "45044", "212978"}));
    EXPECT_TRUE(io.rows[2].computed);
    EXPECT_FALSE(io.rows[0].computed);

    const Table bw = build_table(TableKind::Table3Bandwidth);
    EXPECT_EQ(bw.rows[0].cells, (std::vector<std::string>{"45", "315", "1785", "9207", "45045", "212979"}));
    EXPECT_EQ(bw.rows[2].cells.front(), "41");

    const Table t4 = build_table(TableKind::Table4);
    EXPECT_EQ(t4.rows.back().cells,
              (std::vector<std::string>{"83.3%", "78.6%", "76.7%", "79.3%", "77.0%", "77.2%"}));
}

TEST(Report, RenderingIsStable)
{
    const Table t = build_table(TableKind::Table4);
    const std::string csv = render_table(t, TableFormat::Csv);
    EXPECT_EQ(csv, render_table(build_table(TableKind::Table4), TableFormat::Csv));
    EXPECT_EQ(csv.substr(0, 7), "scheme,");
    EXPECT_NE(csv.find("construction 2 (computed),83.3%,78.6%"), std::string::npos);
    const std::string md = render_table(t, TableFormat::Markdown);
    EXPECT_NE(md.find("| construction 2 (computed) | 83.3% |"), std::string::npos);
    EXPECT_EQ(parse_table_kind("3b"), TableKind::Table3Io);
    EXPECT_FALSE(parse_table_kind("5").has_value());
    EXPECT_EQ(parse_table_format("md"), TableFormat::Markdown);
}

TEST(Report, SimulationOnWorkedExample)
{
    const auto rep = run_simulation(construction1(4, ThetaStrategy::WorkedExample).scheme, 100, 2024);
    EXPECT_EQ(rep.successes, 100u);
    EXPECT_EQ(rep.accessed_per_trial, 44u);
    EXPECT_EQ(rep.transmitted_per_trial, 41u);
    EXPECT_TRUE(rep.ok());
}
