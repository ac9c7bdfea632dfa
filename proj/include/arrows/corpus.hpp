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

// Fixed graph corpus and seeded random positions for self-checks.

#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "graph.hpp"
#include "state.hpp"

namespace arrows {

struct NamedGraph {
    std::string name;
    Graph graph;
};

/// Five vertices x, y, z, a, b; meant to be ramified at {a, b}.
inline Graph ramification_example_graph()
{
    // x=0 y=1 z=2 a=3 b=4
    return Graph(5, {{0, 1}, {1, 2}, {0, 3}, {3, 1}, {1, 4}, {4, 2}, {3, 4}}, {"x", "y", "z", "a", "b"});
}

/// A 4-cycle with a tail of three edges and one pendant edge; its leaves are y and x.
inline Graph inverse_trimming_example_h()
{
    return Graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 5}, {5, 6}, {6, 1}, {2, 7}},
                 {"p", "q", "r", "s", "y", "t", "u", "x"});
}

/// The previous graph with pendants y' and x' attached.
inline Graph inverse_trimming_example_g()
{
    return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 5}, {5, 6}, {6, 1}, {2, 7}, {4, 8}, {7, 9}},
                 {"p", "q", "r", "s", "y", "t", "u", "x", "y'", "x'"});
}

/// All unlabeled trees on exactly `n` vertices, one per isomorphism class,
/// grown leaf by leaf from the smaller classes.
inline std::vector<Graph> trees_on(std::size_t n)
{
    if (n == 0) return {};
    std::vector<Graph> level{Graph(1, {})};
    for (std::size_t size = 2; size <= n; ++size) {
        std::vector<Graph> next;
        std::set<std::vector<std::string>> seen;
        for (const auto& t : level) {
            for (Vertex v = 0; v < t.vertex_count(); ++v) {
                auto edges = t.edge_pairs();
                edges.emplace_back(v, static_cast<Vertex>(size - 1));
                Graph g(size, std::move(edges));
                if (seen.insert(forest_code(g)).second) next.push_back(std::move(g));
            }
        }
        level = std::move(next);
    }
    return level;
}

/// Paths P_1..P_10, spiders with legs at most 4 (a <= b <= c), all trees on
/// at most 9 vertices, and the two hand-drawn example graphs. Isomorphic
/// duplicates across the families are kept.
inline std::vector<NamedGraph> corpus_graphs()
{
    std::vector<NamedGraph> out;
    for (std::size_t n = 1; n <= 10; ++n) out.push_back({"P" + std::to_string(n), path_graph(n)});
    for (unsigned a = 0; a <= 4; ++a)
        for (unsigned b = a; b <= 4; ++b)
            for (unsigned c = b; c <= 4; ++c) {
                if (c == 0) continue;
                out.push_back({"S(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")",
                               spider_graph({a, b, c})});
            }
    for (std::size_t n = 1; n <= 9; ++n) {
        auto trees = trees_on(n);
        for (std::size_t i = 0; i < trees.size(); ++i)
            out.push_back({"tree" + std::to_string(n) + "." + std::to_string(i), std::move(trees[i])});
    }
    out.push_back({"ramification-example", ramification_example_graph()});
    out.push_back({"inverse-trimming-H", inverse_trimming_example_h()});
    out.push_back({"inverse-trimming-G", inverse_trimming_example_g()});
    return out;
}

/// Corpus graphs that can host a game (no isolated vertex).
inline std::vector<NamedGraph> game_corpus(std::size_t max_edges)
{
    std::vector<NamedGraph> out;
    for (auto& g : corpus_graphs())
        if (!g.graph.has_isolated_vertex() && g.graph.edge_count() <= max_edges) out.push_back(std::move(g));
    return out;
}

/// Random labelled tree: vertex i attaches to a uniform earlier vertex.
template <typename Rng>
Graph random_tree(std::size_t n, Rng& rng)
{
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 1; i < n; ++i) {
        std::uniform_int_distribution<Vertex> pick(0, i - 1);
        edges.emplace_back(pick(rng), i);
    }
    return Graph(n, std::move(edges));
}

/// Plays a uniformly random number of uniformly random legal moves from the
/// empty position.
template <typename Rng>
State random_state(const GraphPtr& g, Rng& rng, RuleSet rules = RuleSet::Trimmed)
{
    State x(g);
    std::uniform_int_distribution<std::size_t> steps_dist(0, g->edge_count());
    const auto steps = steps_dist(rng);
    for (std::size_t i = 0; i < steps; ++i) {
        auto moves = legal_moves(x, rules);
        if (moves.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
        x = apply_move(x, moves[pick(rng)], rules);
    }
    return x;
}

/// Calls `fn` on every decoration of `g` (all 3^E codes) that is a state
/// under `rules`.
inline void for_each_state(const GraphPtr& g, RuleSet rules, const std::function<void(const State&)>& fn)
{
    const std::size_t m = g->edge_count();
    if (m > 16) fail(ErrorCode::ResourceLimit, "exhaustive enumeration is limited to 16 edges");
    std::vector<int> digit(m, 0);
    while (true) {
        std::vector<Arrow> arrows;
        for (std::size_t i = 0; i < m; ++i) {
            const auto e = g->edge(i);
            if (digit[i] == 1) arrows.push_back({e.first, e.second});
            if (digit[i] == 2) arrows.push_back({e.second, e.first});
        }
        Decoration d(g, arrows);
        if (d.is_valid(rules)) fn(State::from_decoration(d));
        std::size_t i = 0;
        while (i < m && digit[i] == 2) digit[i++] = 0;
        if (i == m) break;
        ++digit[i];
    }
}

}  // namespace arrows
