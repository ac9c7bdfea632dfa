/*
 * Copyright 2026 The arrows authors
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
 */

// Acceptance run: one PASS/FAIL line per criterion, with its time budget.
//
// Two catalog claims have known counterexamples (listed below). Their
// criteria print FAIL. The exit status is 0 when the only failing rows are
// exactly those counterexamples, so an unexpected failure or a vanished
// counterexample both turn the run red. --strict exits 1 on any FAIL.

#include <chrono>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "arrows/arrows.hpp"
#include "arrows/selfcheck.hpp"

namespace {

using namespace arrows;

struct KnownCounterexample {
    std::string entry;
    std::string case_name;
    std::string params;
};

const std::vector<KnownCounterexample> kKnown = {
    // g1 = g(S[in0 out0 4]) = 0 < c-2 but g2 = g(S[in0 in0 4]) = 4, the
    // value of T_4.
    {"E19", "part2 S[in0 in0 4]", "a=0 b=0 c=4"},
    // P_2 under the leaf rule has no legal move, so the first player loses
    // although the edge count is odd.
    {"E22", "P_n arrows", "n=2"},
};

bool is_known(const CatalogRow& r)
{
    for (const auto& k : kKnown)
        if (r.entry == k.entry && r.case_name == k.case_name && r.params == k.params) return true;
    return false;
}

struct Outcome {
    bool pass = false;
    std::string detail;
    std::vector<CatalogRow> failed_rows;
};

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<Outcome()> run;
};

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

Outcome catalog_outcome(Engine& engine, const std::vector<std::string>& ids)
{
    Outcome o{true, "", {}};
    std::ostringstream d;
    for (const auto& id : ids) {
        auto r = verify_entry(id, engine, std::nullopt, jobs());
        d << id << " " << r.rows.size() - r.failures() << "/" << r.rows.size() << " ";
        for (const auto& row : r.rows)
            if (!row.match) o.failed_rows.push_back(row);
        o.pass = o.pass && r.all_match();
    }
    o.detail = d.str();
    return o;
}

Outcome report_outcome(const std::vector<SelfCheckReport>& reports, const std::vector<std::string>& names)
{
    Outcome o{true, "", {}};
    std::ostringstream d;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        d << names[i] << " " << reports[i].states << " states " << reports[i].mismatches << " mismatches ";
        o.pass = o.pass && reports[i].ok();
    }
    o.detail = d.str();
    return o;
}

Outcome trimming_equivalence()
{
    Engine engine;
    std::size_t graphs = 0, bad = 0;
    for (const auto& ng : game_corpus(10)) {
        if (!is_forest(ng.graph) || connected_components(ng.graph).size() != 1) continue;
        ++graphs;
        const auto dormant = grundy_dormant(empty_state(ng.graph));
        const auto trimmed = engine.grundy(empty_state(trimming(ng.graph)));
        if (dormant != trimmed) ++bad;
    }
    return {bad == 0 && graphs > 0, std::to_string(graphs) + " trees " + std::to_string(bad) + " mismatches", {}};
}

Outcome property_suite()
{
    Engine engine;
    const std::size_t n = 1000;
    const std::uint64_t seed = 20260101;
    const PropertyReport reports[] = {property_flip(engine, n, seed), property_nim_sum(engine, n, seed + 1),
                                      property_mex(engine, n, seed + 2), property_parity(engine, n, seed + 3)};
    Outcome o{true, "", {}};
    std::ostringstream d;
    for (const auto& r : reports) {
        d << r.name << " " << r.cases - r.failures << "/" << r.cases << "; ";
        o.pass = o.pass && r.ok() && r.cases >= n;
    }
    o.detail = d.str();
    return o;
}

}  // namespace

int main(int argc, char** argv)
{
    bool strict = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--strict") == 0) strict = true;

    Engine engine;
    const std::vector<Criterion> criteria = {
        {"closed forms F_n C_n T_n R_n, n <= 10", 5, [&] { return catalog_outcome(engine, {"E1", "E2", "E3", "E4"}); }},
        {"eight basic isomorphism lines, n <= 8", 10,
         [&] { return catalog_outcome(engine, {"E5", "E6", "E7", "E8", "E9", "E10", "E11", "E12"}); }},
        {"parity classes n <= 7 and short-leg values b,c <= 6", 60,
         [&] { return catalog_outcome(engine, {"E13", "E15"}); }},
        {"three marked legs 2 <= a,b,c <= 5, all directions", 300, [&] { return catalog_outcome(engine, {"E18"}); }},
        {"E14 E16 E17 grids", 120, [&] { return catalog_outcome(engine, {"E14", "E16", "E17"}); }},
        {"E19 relations, even a,b <= 4, even c <= 4", 300, [&] { return catalog_outcome(engine, {"E19"}); }},
        {"E20 parity and E19b, a <= 5, even b,c <= 4", 300, [&] { return catalog_outcome(engine, {"E20", "E19b"}); }},
        {"empty spiders with even legs in {2,4,6} have value 0", 600,
         [&] { return catalog_outcome(engine, {"E21"}); }},
        {"Game of Arrows winners: odd spiders <= 5, paths n <= 9", 120,
         [&] { return catalog_outcome(engine, {"E22"}); }},
        {"dormant value of G equals value of T(G), corpus trees <= 10 edges", 300, trimming_equivalence},
        {"engine equals reference: exhaustive <= 8 edges, 10^4 random at 9-14", 600,
         [] {
             Engine fresh;
             return report_outcome({oracle_exhaustive(fresh, 8, jobs()), oracle_random(fresh, 10000, 9, 14, 7, jobs())},
                                   {"exhaustive", "random"});
         }},
        {"properties: flip, nim-sum, mex, parity, 10^3 cases each", 600, property_suite},
    };

    std::size_t passed = 0;
    bool unexpected = false;
    std::set<std::string> seen_known;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what(), {}};
            unexpected = true;
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.budget_seconds;
        const bool pass = o.pass && in_time;
        passed += pass;
        std::cout << (pass ? "PASS" : "FAIL") << "  [" << std::setw(2) << i + 1 << "] " << c.name << "  ("
                  << std::fixed << std::setprecision(2) << secs << " s, budget " << c.budget_seconds << " s)  "
                  << o.detail << "\n";
        if (!in_time) {
            std::cout << "      over time budget\n";
            unexpected = true;
        }
        for (const auto& row : o.failed_rows) {
            const bool known = is_known(row);
            if (known) seen_known.insert(row.entry + "|" + row.case_name + "|" + row.params);
            else unexpected = true;
            std::cout << "      " << (known ? "known counterexample" : "unexpected failure") << ": " << row.entry
                      << " " << row.case_name << " " << row.params << " claim " << row.claim << " engine "
                      << row.engine << "\n";
        }
        if (!o.pass && o.failed_rows.empty()) unexpected = true;
    }
    for (const auto& k : kKnown)
        if (!seen_known.count(k.entry + "|" + k.case_name + "|" + k.params)) {
            std::cout << "known counterexample did not reproduce: " << k.entry << " " << k.case_name << " "
                      << k.params << "\n";
            unexpected = true;
        }
    std::cout << passed << "/" << criteria.size() << " criteria passed\n";
    if (strict) return passed == criteria.size() ? 0 : 1;
    return unexpected ? 1 : 0;
}
