/**************************************************************************
 * rsrepair_cli.cpp
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

// Command-line front end. Every subcommand prints JSON (or a table) on
// stdout. Exit codes: 0 success, 1 invalid input or parameters, 2 a
// cross-check between independent computations failed.

#include "rsrepair/bounds.hpp"
#include "rsrepair/constructions.hpp"
#include "rsrepair/error.hpp"
#include "rsrepair/expsum.hpp"
#include "rsrepair/report.hpp"
#include "rsrepair/serialize.hpp"
#include "rsrepair/verify.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <string>

using namespace rsrepair;

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitMismatch = 2;

/// A cross-check failed; reported with exit code 2.
struct Mismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const Json& j, const std::string& out)
{
    if (out.empty() || out == "-")
        std::cout << j.dump(2) << '\n';
    else
        save_json(out, j);
}

std::pair<unsigned, unsigned> split_prime_power(std::uint64_t q)
{
    if (q < 2)
        throw Error(ErrorCode::NotPrime, "q must be a prime power >= 2");
    unsigned p = 2;
    while (q % p != 0)
        ++p;
    unsigned a = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++a;
    }
    if (rest != 1)
        throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
    return {p, a};
}

Json metrics_json(const MetricsReport& m)
{
    return Json{{"method", std::string(to_string(m.method))}, {"io_cost", m.io_cost}, {"bandwidth", m.bandwidth}};
}

Json run_metrics(const RepairScheme& s, const std::string& method)
{
    const std::uint64_t n = s.code().n();
    Json j{{"n", n}, {"k", s.code().k()}, {"r", s.code().r()}, {"ell", s.ell()}, {"target", s.target() + 1}};
    const NormalForm nf = normalize(s);
    j["normal_form"] = Json{{"m", nf.m}, {"t", nf.t}};

    if (method == "direct" || method == "weight") {
        const auto m = method == "direct" ? metrics_direct(s) : metrics_weight(s);
        j.update(metrics_json(m));
        return j;
    }
    if (method == "expsum") {
        j["method"] = "expsum";
        j["io_cost"] = io_cost_expsum(nf);
        return j;
    }
    // default: all three, cross-checked
    const auto direct = metrics_direct(s);
    const auto weight = metrics_weight(s);
    const auto ex = io_cost_expsum(nf);
    j["io_cost"] = direct.io_cost;
    j["bandwidth"] = direct.bandwidth;
    j["naive"] = (n - 1) * s.ell();
    j["methods"] = Json{{"direct", metrics_json(direct)},
                        {"weight", metrics_json(weight)},
                        {"expsum", Json{{"io_cost", ex}}}};
    const bool agree = direct.io_cost == weight.io_cost && direct.io_cost == ex && direct.bandwidth == weight.bandwidth;
    j["agree"] = agree;
    if (!agree) {
        std::cout << j.dump(2) << '\n';
        throw Mismatch("metric methods disagree");
    }
    return j;
}

Json bound_json(const BoundResult& b)
{
    Json j{{"value", b.value}, {"theorem", std::string(to_string(b.theorem))}, {"tight_known", b.tight_known}};
    if (!b.case_label.empty())
        j["case"] = b.case_label;
    Json cands = Json::array();
    for (const auto& c : b.candidates) {
        Json cj{{"theorem", std::string(to_string(c.theorem))}, {"value", c.value}, {"tight_known", c.tight_known}};
        if (!c.case_label.empty())
            cj["case"] = c.case_label;
        cands.push_back(std::move(cj));
    }
    j["candidates"] = std::move(cands);
    return j;
}

Json suite_json(const SuiteReport& r)
{
    return Json{{"suite", r.name},     {"passed", r.passed()}, {"checks", r.checks},
                {"failures", r.failures}, {"samples", r.samples}, {"notes", r.notes}};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Linear repair schemes for Reed-Solomon codes: I/O cost, bandwidth, bounds and constructions"};
    app.require_subcommand(1);

    // field
    auto* field = app.add_subcommand("field", "Describe GF(q^ell) over GF(q)");
    std::uint64_t field_q = 2;
    unsigned field_ell = 4;
    field->add_option("--q", field_q, "Subfield size (prime power)")->required();
    field->add_option("--ell", field_ell, "Extension degree")->required();

    // construct
    auto* construct = app.add_subcommand("construct", "Build a repair scheme and write it as JSON");
    construct->require_subcommand(1);
    auto* c1 = construct->add_subcommand("c1", "Construction 1: RS(F, 2^ell - 3) over GF(2^ell)");
    unsigned c1_ell = 4;
    std::string c1_theta = "conway", c1_out;
    c1->add_option("--ell", c1_ell, "Even extension degree >= 4")->required();
    c1->add_option("--theta", c1_theta, "Choice of theta")->check(CLI::IsMember({"paper", "search", "conway"}));
    c1->add_option("--out", c1_out, "Output file (stdout if omitted)");
    auto* c2 = construct->add_subcommand("c2", "Construction 2: RS(A, q^d - r) with dim A = d");
    Construction2Params c2p;
    std::string c2_out;
    c2->add_option("--q", c2p.q)->required();
    c2->add_option("--ell", c2p.ell)->required();
    c2->add_option("--d", c2p.d)->required();
    c2->add_option("--s", c2p.s)->required();
    c2->add_option("--m", c2p.m)->required();
    c2->add_option("--r", c2p.r)->required();
    c2->add_option("--out", c2_out, "Output file (stdout if omitted)");

    // metrics
    auto* metrics = app.add_subcommand("metrics", "I/O cost and bandwidth of a scheme file");
    std::string metrics_file, metrics_method = "all";
    metrics->add_option("scheme", metrics_file)->required()->check(CLI::ExistingFile);
    metrics->add_option("--method", metrics_method, "Single method, or all three cross-checked")
        ->check(CLI::IsMember({"all", "direct", "weight", "expsum"}));

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Repair random codewords and tally the accesses");
    std::string sim_file;
    std::size_t sim_trials = 100;
    std::uint64_t sim_seed = 1;
    simulate->add_option("scheme", sim_file)->required()->check(CLI::ExistingFile);
    simulate->add_option("--trials", sim_trials);
    simulate->add_option("--seed", sim_seed);

    // bounds
    auto* bounds = app.add_subcommand("bounds", "Lower bounds on I/O cost or bandwidth");
    BoundQuery bq;
    std::string bq_quantity = "io", bq_theorem = "auto";
    bounds->add_option("--q", bq.q)->required();
    bounds->add_option("--ell", bq.ell)->required();
    bounds->add_option("--d", bq.d)->required();
    bounds->add_option("--r", bq.r)->required();
    bounds->add_option("--quantity", bq_quantity)->check(CLI::IsMember({"io", "bandwidth"}));
    bounds->add_option("--theorem", bq_theorem)
        ->check(CLI::IsMember({"auto", "coro11", "thm4", "thm6", "thm5", "thm8"}));

    // tables
    auto* tables = app.add_subcommand("tables", "Regenerate the comparison tables");
    std::string tab_which = "3a", tab_format = "md", tab_theta = "conway";
    tables->add_option("--which", tab_which)->required()->check(CLI::IsMember({"3a", "3b", "4"}));
    tables->add_option("--format", tab_format)->check(CLI::IsMember({"csv", "md"}));
    tables->add_option("--theta", tab_theta, "Theta choice for Construction 1 rows")
        ->check(CLI::IsMember({"paper", "search", "conway"}));

    // verify
    auto* verify = app.add_subcommand("verify", "Run oracle property suites");
    std::string ver_suite = "all";
    VerifyOptions vopt;
    std::vector<std::string> suite_choices{"all"};
    suite_choices.insert(suite_choices.end(), suite_names().begin(), suite_names().end());
    verify->add_option("--suite", ver_suite)->check(CLI::IsMember(suite_choices));
    verify->add_option("--seed", vopt.seed);
    verify->add_option("--size", vopt.size, "Random instances per suite (0 = suite default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    try {
        if (*field) {
            const auto [p, a] = split_prime_power(field_q);
            const FieldTower f = FieldTower::create(p, a, field_ell);
            Json j = field_to_json(f);
            j["q"] = f.q();
            j["size"] = f.size();
            j["primitive"] = element_to_json(f, f.primitive());
            j["trace_kernel_dim"] = trace_kernel(f).dim();
            emit(j, "");
        } else if (*c1) {
            const auto st = parse_theta_strategy(c1_theta);
            const Construction1 c = construction1(c1_ell, *st);
            const FieldTower& f = c.scheme.tower();
            emit(scheme_to_json(c.scheme, Json{{"construction", "c1"},
                                               {"ell", c1_ell},
                                               {"theta_strategy", c1_theta},
                                               {"theta", element_to_json(f, c.theta)},
                                               {"zeta", element_to_json(f, c.zeta)}}),
                 c1_out);
        } else if (*c2) {
            const Construction2 c = construction2(c2p);
            emit(scheme_to_json(c.scheme, Json{{"construction", "c2"},
                                               {"q", c2p.q},
                                               {"ell", c2p.ell},
                                               {"d", c2p.d},
                                               {"s", c2p.s},
                                               {"m", c2p.m},
                                               {"r", c2p.r}}),
                 c2_out);
        } else if (*metrics) {
            emit(run_metrics(load_scheme(metrics_file), metrics_method), "");
        } else if (*simulate) {
            const auto s = load_scheme(sim_file);
            const auto rep = run_simulation(s, sim_trials, sim_seed);
            Json j{{"trials", rep.trials},
                   {"successes", rep.successes},
                   {"accessed_per_trial", rep.accessed_per_trial},
                   {"transmitted_per_trial", rep.transmitted_per_trial},
                   {"io_cost", rep.io_cost},
                   {"bandwidth", rep.bandwidth},
                   {"accessed_matches_io", rep.accessed_matches()},
                   {"transmitted_matches_bandwidth", rep.transmitted_matches()},
                   {"ok", rep.ok()}};
            emit(j, "");
            if (!rep.ok())
                return kExitMismatch;
        } else if (*bounds) {
            const auto th = *parse_bound_theorem(bq_theorem);
            const auto res = bq_quantity == "io" ? io_lower_bound(bq, th) : bandwidth_lower_bound(bq, th);
            emit(bound_json(res), "");
        } else if (*tables) {
            const Table t = build_table(*parse_table_kind(tab_which), tab_theta);
            std::cout << render_table(t, *parse_table_format(tab_format));
        } else if (*verify) {
            Json reports = Json::array();
            bool all_passed = true;
            for (const auto& name : suite_names()) {
                if (ver_suite != "all" && ver_suite != name)
                    continue;
                const auto rep = run_suite(name, vopt);
                all_passed = all_passed && rep.passed();
                reports.push_back(suite_json(rep));
            }
            emit(Json{{"seed", vopt.seed}, {"passed", all_passed}, {"suites", reports}}, "");
            if (!all_passed)
                return kExitMismatch;
        }
    } catch (const Mismatch& e) {
        std::cerr << "cross-check failed: " << e.what() << '\n';
        return kExitMismatch;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        const bool bug = e.code() == ErrorCode::Internal || e.code() == ErrorCode::NonIntegerSum;
        return bug ? kExitMismatch : kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return 0;
}
