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

#pragma once

// Fast engine against the reference solver, over the fixed corpus and over
// seeded random positions.

#include <algorithm>
#include <atomic>
#include <mutex>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "corpus.hpp"
#include "graph_io.hpp"
#include "grundy.hpp"

namespace arrows {

struct SelfCheckReport {
    std::size_t graphs = 0;
    std::size_t states = 0;
    std::size_t mismatches = 0;
    std::vector<std::string> examples;

    bool ok() const noexcept { return mismatches == 0; }
};

namespace detail {

template <typename Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& fn)
{
    jobs = std::max(1u, jobs);
    if (jobs == 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < n;) fn(i);
        });
    for (auto& t : pool) t.join();
}

struct ReportSink {
    std::mutex mutex;
    SelfCheckReport report;

    void add(std::size_t states, const std::vector<std::string>& bad)
    {
        std::lock_guard lock(mutex);
        ++report.graphs;
        report.states += states;
        report.mismatches += bad.size();
        for (const auto& b : bad)
            if (report.examples.size() < 10) report.examples.push_back(b);
    }
};

inline std::string mismatch_text(const std::string& name, const State& x, Grundy fast, Grundy slow)
{
    std::string arrows;
    for (const auto& a : x.arrows()) arrows += " " + to_string(a);
    return name + " [" + arrows + " ] engine=" + std::to_string(fast) + " reference=" + std::to_string(slow);
}

}  // namespace detail

/// Every state of every game-corpus graph with at most `max_edges` edges.
inline SelfCheckReport oracle_exhaustive(Engine& engine, std::size_t max_edges, unsigned jobs = 1)
{
    const auto graphs = game_corpus(max_edges);
    detail::ReportSink sink;
    detail::parallel_for(graphs.size(), jobs, [&](std::size_t i) {
        auto g = share(graphs[i].graph);
        NaiveSolver naive(g, RuleSet::Trimmed);
        std::size_t count = 0;
        std::vector<std::string> bad;
        for_each_state(g, RuleSet::Trimmed, [&](const State& x) {
            ++count;
            const Grundy fast = engine.grundy(x), slow = naive.grundy(x);
            if (fast != slow) bad.push_back(detail::mismatch_text(graphs[i].name, x, fast, slow));
        });
        sink.add(count, bad);
    });
    return sink.report;
}

/// Graphs with `lo`..`hi` edges: spiders plus seeded random trees.
inline std::vector<NamedGraph> random_check_graphs(std::size_t lo, std::size_t hi, std::size_t trees_per_size,
                                                   std::uint64_t seed)
{
    std::vector<NamedGraph> out;
    for (unsigned a = 1; a <= hi; ++a)
        for (unsigned b = a; a + b <= hi; ++b)
            for (unsigned c = b; a + b + c <= hi; ++c)
                if (a + b + c >= lo)
                    out.push_back({"S(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")",
                                   spider_graph({a, b, c})});
    std::mt19937_64 rng(seed);
    for (std::size_t m = lo; m <= hi; ++m)
        for (std::size_t k = 0; k < trees_per_size; ++k)
            out.push_back({"tree" + std::to_string(m + 1) + "#" + std::to_string(k), random_tree(m + 1, rng)});
    return out;
}

/// `count` seeded random states spread round-robin over random_check_graphs.
inline SelfCheckReport oracle_random(Engine& engine, std::size_t count, std::size_t lo, std::size_t hi,
                                     std::uint64_t seed, unsigned jobs = 1)
{
    const auto graphs = random_check_graphs(lo, hi, 4, seed);
    detail::ReportSink sink;
    detail::parallel_for(graphs.size(), jobs, [&](std::size_t i) {
        const std::size_t share_count = count / graphs.size() + (i < count % graphs.size() ? 1 : 0);
        auto g = share(graphs[i].graph);
        NaiveSolver naive(g, RuleSet::Trimmed);
        std::mt19937_64 rng(seed * 1000003u + i);
        std::vector<std::string> bad;
        for (std::size_t k = 0; k < share_count; ++k) {
            const State x = random_state(g, rng);
            const Grundy fast = engine.grundy(x), slow = naive.grundy(x);
            if (fast != slow) bad.push_back(detail::mismatch_text(graphs[i].name, x, fast, slow));
        }
        sink.add(share_count, bad);
    });
    return sink.report;
}

/// Graphs for property sampling: random trees with 2..`hi` edges plus the
/// non-tree corpus graphs.
inline std::vector<NamedGraph> property_graphs(std::size_t hi, std::uint64_t seed)
{
    std::vector<NamedGraph> out;
    std::mt19937_64 rng(seed);
    for (std::size_t m = 2; m <= hi; ++m)
        for (int k = 0; k < 6; ++k)
            out.push_back({"tree" + std::to_string(m + 1) + "#" + std::to_string(k), random_tree(m + 1, rng)});
    out.push_back({"ramification-example", ramification_example_graph()});
    out.push_back({"inverse-trimming-H", inverse_trimming_example_h()});
    out.push_back({"inverse-trimming-G", inverse_trimming_example_g()});
    return out;
}

struct PropertyReport {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::vector<std::string> examples;

    bool ok() const noexcept { return failures == 0; }
    void fail_case(std::string text)
    {
        ++failures;
        if (examples.size() < 5) examples.push_back(std::move(text));
    }
};

namespace detail {

inline std::string arrows_text(const State& x)
{
    std::string out = "[";
    for (const auto& a : x.arrows()) out += " " + to_string(a);
    return out + " ]";
}

template <typename Fn>
void sample_states(std::size_t count, std::uint64_t seed, std::size_t hi, Fn&& fn)
{
    const auto graphs = property_graphs(hi, seed);
    std::vector<GraphPtr> shared;
    for (const auto& g : graphs) shared.push_back(share(g.graph));
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        const auto k = i % shared.size();
        fn(graphs[k].name, random_state(shared[k], rng), rng);
    }
}

}  // namespace detail

/// g(X) = g(flip X).
inline PropertyReport property_flip(Engine& engine, std::size_t count, std::uint64_t seed)
{
    PropertyReport r{"flip invariance", 0, 0, {}};
    detail::sample_states(count, seed, 14, [&](const std::string& name, const State& x, auto&) {
        ++r.cases;
        const auto a = engine.grundy(x), b = engine.grundy(flip(x));
        if (a != b)
            r.fail_case(name + " " + detail::arrows_text(x) + " " + std::to_string(a) + " vs " + std::to_string(b));
    });
    return r;
}

/// g(X + Y) = g(X) xor g(Y), with the union evaluated by the reference solver.
inline PropertyReport property_nim_sum(Engine& engine, std::size_t count, std::uint64_t seed)
{
    PropertyReport r{"disjoint-union nim-sum", 0, 0, {}};
    std::mt19937_64 rng(seed);
    const auto graphs = property_graphs(6, seed);
    std::vector<GraphPtr> shared;
    for (const auto& g : graphs) shared.push_back(share(g.graph));
    std::uniform_int_distribution<std::size_t> pick(0, shared.size() - 1);
    while (r.cases < count) {
        const auto i = pick(rng), j = pick(rng);
        const State x = random_state(shared[i], rng), y = random_state(shared[j], rng);
        const State u = disjoint_union(x, y);
        if (u.unmarked_count() > kNaiveMaxEdges) continue;
        ++r.cases;
        const auto whole = grundy_naive(u), parts = engine.grundy(x) ^ engine.grundy(y);
        if (whole != parts)
            r.fail_case(graphs[i].name + " + " + graphs[j].name + ": " + std::to_string(whole) + " vs " +
                        std::to_string(parts));
    }
    return r;
}

/// No follower shares g(X) and every smaller value is attained.
inline PropertyReport property_mex(Engine& engine, std::size_t count, std::uint64_t seed)
{
    PropertyReport r{"mex law", 0, 0, {}};
    detail::sample_states(count, seed, 14, [&](const std::string& name, const State& x, auto&) {
        ++r.cases;
        const auto g = engine.grundy(x);
        std::vector<char> seen(g, 0);
        bool clash = false;
        for (const auto& a : legal_moves(x)) {
            const auto v = engine.grundy(apply_move(x, a));
            if (v == g) clash = true;
            if (v < g) seen[v] = 1;
        }
        if (clash || std::find(seen.begin(), seen.end(), 0) != seen.end())
            r.fail_case(name + " " + detail::arrows_text(x) + " g=" + std::to_string(g));
    });
    return r;
}

/// Even class has value 0, odd class value 1. Counts only states whose class
/// is not mixed; gives up after 200 samples per requested case.
inline PropertyReport property_parity(Engine& engine, std::size_t count, std::uint64_t seed)
{
    PropertyReport r{"parity law", 0, 0, {}};
    std::mt19937_64 rng(seed);
    const auto graphs = property_graphs(10, seed);
    std::vector<GraphPtr> shared;
    for (const auto& g : graphs) shared.push_back(share(g.graph));
    std::uniform_int_distribution<std::size_t> pick(0, shared.size() - 1);
    for (std::size_t tries = 0; r.cases < count && tries < 200 * count; ++tries) {
        const auto i = pick(rng);
        const State x = random_state(shared[i], rng);
        const auto cls = parity_moves_class(x);
        if (cls == ParityClass::Mixed) continue;
        ++r.cases;
        const Grundy want = cls == ParityClass::Even ? 0 : 1;
        const auto got = engine.grundy(x);
        if (got != want)
            r.fail_case(graphs[i].name + " " + detail::arrows_text(x) + " class " + std::string(to_string(cls)) +
                        " g=" + std::to_string(got));
    }
    if (r.cases < count) r.fail_case("only " + std::to_string(r.cases) + " non-mixed states found");
    return r;
}

}  // namespace arrows
