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

// arrows: command-line front end.
//
// Exit codes: 0 success, 1 verification mismatch, 2 invalid input,
// 3 resource limit.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "arrows/arrows.hpp"
#include "arrows/selfcheck.hpp"
#include "arrows/service_http.hpp"

namespace {

using namespace arrows;

constexpr int kMismatch = 1;
constexpr int kInvalid = 2;
constexpr int kLimit = 3;

GraphPtr load_graph(const std::string& path)
{
    try {
        return share(parse_graph(read_file(path)));
    } catch (const Error& e) {
        throw Error(e.code(), path + ": " + e.what());
    }
}

State load_state(const std::string& path, GraphPtr g)
{
    try {
        return parse_state(read_file(path), std::move(g));
    } catch (const Error& e) {
        throw Error(e.code(), path + ": " + e.what(), e.violation());
    }
}

RuleSet mode_of(const std::string& m) { return m == "arrows" ? RuleSet::Arrows : RuleSet::Trimmed; }

unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

struct PositionArgs {
    std::string graph;
    std::string state;
    std::string mode = "trimmed";

    void add_to(CLI::App* cmd)
    {
        cmd->add_option("--graph", graph, "graph file")->required()->check(CLI::ExistingFile);
        cmd->add_option("--state", state, "state file (arrow lines or sstate)")->check(CLI::ExistingFile);
        cmd->add_option("--mode", mode, "rule set")->check(CLI::IsMember({"trimmed", "arrows"}));
    }

    State load(GraphPtr g) const { return state.empty() ? State(g) : load_state(state, g); }
};

int cmd_grundy(const PositionArgs& p, bool stats, bool json)
{
    Engine engine;
    auto g = load_graph(p.graph);
    Grundy value = 0;
    if (mode_of(p.mode) == RuleSet::Arrows) {
        auto game = make_trimmed_game(g);
        value = engine.grundy(game, p.load(g));
    } else {
        value = engine.grundy(p.load(g));
    }
    const auto s = engine.stats();
    if (json) {
        Json out = {{"grundy", value}, {"mode", p.mode}};
        if (stats)
            out["stats"] = {{"nodes_expanded", s.nodes_expanded},
                            {"hits", s.hits},
                            {"misses", s.misses},
                            {"cache_entries", s.cache_entries}};
        std::cout << out.dump() << "\n";
        return 0;
    }
    std::cout << value << "\n";
    if (stats)
        std::cout << "nodes_expanded " << s.nodes_expanded << "\nhits " << s.hits << "\nmisses " << s.misses
                  << "\ncache_entries " << s.cache_entries << "\n";
    return 0;
}

int cmd_winner(const std::string& graph, const std::string& mode)
{
    Engine engine;
    std::cout << to_string(engine.winner(*load_graph(graph), mode_of(mode))) << "\n";
    return 0;
}

int cmd_best_move(const PositionArgs& p)
{
    Engine engine;
    auto g = load_graph(p.graph);
    std::optional<Arrow> mv;
    if (mode_of(p.mode) == RuleSet::Arrows) {
        auto game = make_trimmed_game(g);
        mv = engine.best_move(game, p.load(g));
    } else {
        mv = engine.best_move(p.load(g));
    }
    if (mv)
        std::cout << "a " << mv->tail << " " << mv->head << "\n";
    else
        std::cout << "none\n";
    return 0;
}

int cmd_trim(const std::string& graph, const std::string& out)
{
    const auto text = serialize_graph(trimming(*load_graph(graph)));
    if (out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw Error(ErrorCode::InvalidParameter, "cannot write " + out);
    f << text;
    return 0;
}

int cmd_verify(const std::string& entry, std::optional<unsigned> max, std::optional<unsigned> aux,
               const std::string& report, unsigned jobs)
{
    Engine engine;
    std::vector<std::string> ids;
    if (entry == "all")
        for (const auto& e : catalog()) ids.push_back(e.id);
    else
        ids.push_back(catalog_entry(entry).id);

    std::vector<EntryReport> reports;
    bool ok = true;
    for (const auto& id : ids) {
        GridBounds gb = catalog_entry(id).defaults;
        if (max) gb.max = *max;
        if (aux) gb.aux = *aux;
        auto r = verify_entry(id, engine, gb, jobs);
        std::cout << id << " rows " << r.rows.size() << " failures " << r.failures() << "\n";
        ok = ok && r.all_match();
        reports.push_back(std::move(r));
    }
    if (!report.empty()) {
        std::ofstream f(report, std::ios::binary);
        if (!f) throw Error(ErrorCode::InvalidParameter, "cannot write " + report);
        f << report_csv(reports);
    }
    return ok ? 0 : kMismatch;
}

int cmd_selfcheck(std::size_t edges, std::uint64_t seed, std::size_t random_count, unsigned jobs)
{
    Engine engine;
    const auto exhaustive = oracle_exhaustive(engine, std::min<std::size_t>(edges, 8), jobs);
    std::cout << "exhaustive graphs " << exhaustive.graphs << " states " << exhaustive.states << " mismatches "
              << exhaustive.mismatches << "\n";
    bool ok = exhaustive.ok();
    for (const auto& m : exhaustive.examples) std::cout << "  " << m << "\n";
    if (edges > 8 && random_count > 0) {
        const auto hi = std::min<std::size_t>(edges, kNaiveMaxEdges);
        const auto random = oracle_random(engine, random_count, 9, hi, seed, jobs);
        std::cout << "random graphs " << random.graphs << " states " << random.states << " mismatches "
                  << random.mismatches << "\n";
        for (const auto& m : random.examples) std::cout << "  " << m << "\n";
        ok = ok && random.ok();
    }
    return ok ? 0 : kMismatch;
}

int cmd_serve(const std::string& host, int port)
{
    SessionStore store;
    std::cout << "listening on " << host << ":" << port << "\n" << std::flush;
    if (!serve(store, host, port)) throw Error(ErrorCode::InvalidParameter, "cannot listen on port " + std::to_string(port));
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact solver for the Game of Arrows and the Trimmed Game of Arrows"};
    app.require_subcommand(1);

    PositionArgs grundy_args;
    bool stats = false, json = false;
    auto* grundy = app.add_subcommand("grundy", "Grundy value of a position");
    grundy_args.add_to(grundy);
    grundy->add_flag("--stats", stats, "print engine statistics");
    grundy->add_flag("--json", json, "machine-readable output");

    std::string winner_graph, winner_mode = "trimmed";
    auto* winner = app.add_subcommand("winner", "winner of the empty position under perfect play");
    winner->add_option("--graph", winner_graph, "graph file")->required()->check(CLI::ExistingFile);
    winner->add_option("--mode", winner_mode, "rule set")->check(CLI::IsMember({"trimmed", "arrows"}));

    PositionArgs best_args;
    auto* best = app.add_subcommand("best-move", "engine move from a position");
    best_args.add_to(best);

    std::string trim_graph, trim_out;
    auto* trim_cmd = app.add_subcommand("trim", "write the trimming of a graph");
    trim_cmd->add_option("--graph", trim_graph, "graph file")->required()->check(CLI::ExistingFile);
    trim_cmd->add_option("--out", trim_out, "output file (stdout when omitted)");

    std::string entry = "all", report;
    std::optional<unsigned> max, aux;
    unsigned jobs = default_jobs();
    auto* verify = app.add_subcommand("verify", "check closed forms against the engine");
    verify->add_option("--entry", entry, "entry id or all");
    verify->add_option("--max", max, "main grid bound");
    verify->add_option("--aux", aux, "secondary grid bound");
    verify->add_option("--report", report, "CSV report path");
    verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    std::size_t sc_edges = 8, sc_random = 10000;
    std::uint64_t seed = 0;
    unsigned sc_jobs = default_jobs();
    auto* selfcheck = app.add_subcommand("selfcheck", "engine against the reference solver");
    selfcheck->add_option("--edges", sc_edges, "largest graph size (exhaustive up to 8, random above)");
    selfcheck->add_option("--seed", seed, "random seed");
    selfcheck->add_option("--random", sc_random, "number of random states");
    selfcheck->add_option("--jobs", sc_jobs, "worker threads")->check(CLI::PositiveNumber);

    int port = 8080;
    std::string host = "127.0.0.1";
    auto* serve_cmd = app.add_subcommand("serve", "start the play service");
    serve_cmd->add_option("--port", port, "TCP port")->check(CLI::Range(1, 65535));
    serve_cmd->add_option("--host", host, "bind address");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kInvalid;
    }

    try {
        if (*grundy) return cmd_grundy(grundy_args, stats, json);
        if (*winner) return cmd_winner(winner_graph, winner_mode);
        if (*best) return cmd_best_move(best_args);
        if (*trim_cmd) return cmd_trim(trim_graph, trim_out);
        if (*verify) return cmd_verify(entry, max, aux, report, jobs);
        if (*selfcheck) return cmd_selfcheck(sc_edges, seed, sc_random, sc_jobs);
        if (*serve_cmd) return cmd_serve(host, port);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::ResourceLimit ? kLimit : kInvalid;
    }
    return kInvalid;
}
